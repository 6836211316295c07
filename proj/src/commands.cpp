#include "qrep/commands.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <vector>

#include "qrep/deform.hpp"
#include "qrep/indec.hpp"
#include "qrep/io.hpp"
#include "qrep/roots.hpp"

namespace qrep {

namespace {

using nlohmann::json;

json envelope(const std::string& command, const Quiver& q, const std::optional<FieldSpec>& field, json result) {
  json j;
  j["command"] = command;
  j["quiver"] = q.name();
  j["field"] = field ? json(field->name()) : json(nullptr);
  j["result"] = std::move(result);
  j["version"] = qrep_version;
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json coords(const DimVector& d) {
  json a = json::array();
  for (Eigen::Index i = 0; i < d.size(); ++i) a.push_back(d[i]);
  return a;
}

template <class Scalar>
json matrix_json(const Mat<Scalar>& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(FieldTraits<Scalar>::to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Left-aligned columns separated by two spaces.
std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], r[c].size());
    }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? sep : "") + parts[k];
  return out;
}

Quiver load_quiver(const CommandInput& in) {
  try {
    return parse_quiver(in.text);
  } catch (const ParseError& e) {
    throw ParseError(in.name + ": " + e.what());
  }
}

ParsedRep load_rep(const CommandInput& in, const Quiver& q) {
  try {
    return parse_rep(in.text, q);
  } catch (const ParseError& e) {
    throw ParseError(in.name + ": " + e.what());
  } catch (const MismatchError& e) {
    throw MismatchError(in.name + ": " + e.what());
  }
}

FieldSpec load_field(const std::string& text) {
  try {
    return FieldSpec::parse(text);
  } catch (const ParseError& e) {
    throw ParseError(std::string("--field: ") + e.what());
  }
}

template <class Fn>
CommandResult guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    return {static_cast<int>(e.exit_code()), "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {static_cast<int>(ExitCode::internal), "", std::string("internal error: ") + e.what() + "\n"};
  }
}

std::vector<std::string> type_names(const Classification& c) {
  std::vector<std::string> names;
  for (const auto& t : c.types()) names.push_back(t.name());
  return names;
}

}  // namespace

CommandResult cmd_classify(const CommandInput& quiver, const CommandOptions& opts) {
  return guarded([&]() -> CommandResult {
    const Quiver q = load_quiver(quiver);
    const Classification c = classify(q);
    const int code = c.is_finite() ? 0 : static_cast<int>(ExitCode::infinite_type);
    if (opts.format == OutputFormat::json) {
      json comps = json::array();
      for (const auto& comp : c.components) {
        json vs = json::array();
        for (auto v : comp.vertices) vs.push_back(q.label(v));
        comps.push_back({{"vertices", vs},
                         {"type", comp.type ? json(comp.type->name()) : json(nullptr)},
                         {"reason", comp.reason}});
      }
      json result = {{"finite", c.is_finite()},
                     {"positive_definite", is_positive_definite(q)},
                     {"types", type_names(c)},
                     {"components", comps},
                     {"witness", c.witness()}};
      return {code, dump(envelope("classify", q, std::nullopt, result)), ""};
    }
    std::string out = "quiver " + q.name() + ": ";
    if (c.is_finite())
      out += "FiniteType [" + join(type_names(c), ", ") + "]\n";
    else
      out += "InfiniteType (" + c.witness() + ")\n";
    return {code, out, ""};
  });
}

CommandResult cmd_roots(const CommandInput& quiver, const CommandOptions& opts) {
  return guarded([&]() -> CommandResult {
    const Quiver q = load_quiver(quiver);
    const RootSet roots = positive_roots(q);
    if (opts.format == OutputFormat::json) {
      json list = json::array();
      for (const auto& r : roots.roots) list.push_back(coords(r));
      json result = {{"count", roots.size()}, {"roots", list}, {"types", type_names(classify(q))}};
      return {0, dump(envelope("roots", q, std::nullopt, result)), ""};
    }
    std::string out;
    for (const auto& r : roots.roots) out += r.to_string() + "\n";
    out += "count: " + std::to_string(roots.size()) + "\n";
    return {0, out, ""};
  });
}

CommandResult cmd_indec(const CommandInput& quiver, const std::string& dim, const std::string& field_text,
                        IndecMethod method, const CommandOptions& opts) {
  return guarded([&]() -> CommandResult {
    const Quiver q = load_quiver(quiver);
    const FieldSpec field = load_field(field_text);
    const DimVector d = parse_dim_vector(dim, q);
    require_finite_type(q);
    if (!is_positive_root(q, d))
      throw NotARootError("dimension vector " + d.to_string() + " is not a positive root: q = " +
                              std::to_string(tits_form(q, d)),
                          tits_form(q, d));
    if (method == IndecMethod::generic && !field.is_rationals() && field.characteristic() < 101)
      throw MismatchError("the generic construction needs Q or F_p with p >= 101");

    return visit_field(field, [&](auto tag) -> CommandResult {
      using Scalar = typename decltype(tag)::type;
      const auto m = method == IndecMethod::reflection ? construct_indecomposable<Scalar>(q, d, field)
                                                       : generic_rep_oracle<Scalar>(q, d, field, opts.seed);
      std::string name = "indec_" + d.to_string();
      std::replace(name.begin(), name.end(), ',', '_');
      const std::string text = format_rep(m, name);

      const auto reparsed = parse_rep(text, q);
      const auto* back = std::get_if<Representation<Scalar>>(&reparsed.rep);
      if (back == nullptr || !(*back == m)) throw InvariantViolation("emitted representation does not re-parse to itself");
      const auto dims = hom_ext_dims(m, m);
      if (dims.hom != 1 || dims.ext != 0)
        throw InvariantViolation("constructed representation has End of dimension " + std::to_string(dims.hom) +
                                 " and self-Ext of dimension " + std::to_string(dims.ext));
      return {0, text, ""};
    });
  });
}

CommandResult cmd_ext(const CommandInput& quiver, const CommandInput& from, const CommandInput& to,
                      const CommandOptions& opts) {
  return guarded([&]() -> CommandResult {
    const Quiver q = load_quiver(quiver);
    const ParsedRep a = load_rep(from, q);
    const ParsedRep b = load_rep(to, q);
    if (a.rep.index() != b.rep.index()) throw MismatchError("--from and --to are over different fields");

    return std::visit(
        [&](const auto& m) -> CommandResult {
          using R = std::decay_t<decltype(m)>;
          const auto& n = std::get<R>(b.rep);
          require_compatible(m, n);
          const auto hom = hom_space(m, n);
          const auto ext = ext1_space(m, n);
          const long long euler = euler_form(q, m.dims(), n.dims());
          if (static_cast<long long>(hom.dimension()) - static_cast<long long>(ext.dimension()) != euler)
            throw InvariantViolation("Euler identity failed: dim Hom - dim Ext^1 != <dim M, dim N>");

          if (opts.format == OutputFormat::json) {
            json cocycles = json::array();
            for (const auto& eta : ext.cocycles) {
              json c = json::object();
              for (Eigen::Index k = 0; k < q.arrow_count(); ++k)
                c[q.arrow(k).id] = matrix_json(eta[static_cast<std::size_t>(k)]);
              cocycles.push_back(std::move(c));
            }
            json result = {{"from", a.name},       {"to", b.name},
                           {"from_dims", coords(m.dims())}, {"to_dims", coords(n.dims())},
                           {"hom", hom.dimension()}, {"ext", ext.dimension()},
                           {"euler", euler},        {"cocycles", cocycles}};
            return {0, dump(envelope("ext", q, m.field(), result)), ""};
          }
          std::string out = table({{"from", a.name + " (" + m.dims().to_string() + ")"},
                                   {"to", b.name + " (" + n.dims().to_string() + ")"},
                                   {"field", m.field().name()},
                                   {"dim Hom", std::to_string(hom.dimension())},
                                   {"dim Ext1", std::to_string(ext.dimension())},
                                   {"euler", std::to_string(euler)}});
          return {0, out, ""};
        },
        a.rep);
  });
}

namespace {

struct UdrLine {
  DimVector root;
  UdrReport report;
  bool dims_ok = true;
};

json udr_json(const UdrLine& l) {
  return {{"root", coords(l.root)},
          {"end_dim", l.report.end_dim},
          {"ext_dim", l.report.ext_dim},
          {"has_universal_ring", l.report.has_universal_ring},
          {"verdict", l.report.verdict_text()}};
}

}  // namespace

CommandResult cmd_verify_udr(const CommandInput& quiver, const std::string& field_text,
                             const std::optional<std::string>& dim, const CommandOptions& opts) {
  return guarded([&]() -> CommandResult {
    const Quiver q = load_quiver(quiver);
    const FieldSpec field = load_field(field_text);
    require_finite_type(q);
    std::optional<DimVector> only;
    if (dim) {
      only = parse_dim_vector(*dim, q);
      if (!is_positive_root(q, *only))
        throw NotARootError("dimension vector " + only->to_string() + " is not a positive root: q = " +
                                std::to_string(tits_form(q, *only)),
                            tits_form(q, *only));
    }

    std::vector<UdrLine> lines = visit_field(field, [&](auto tag) {
      using Scalar = typename decltype(tag)::type;
      std::vector<UdrLine> out;
      auto check = [&](const DimVector& root, const Representation<Scalar>& m) {
        out.push_back({root, udr_report(m), m.dims() == root});
      };
      if (only) {
        check(*only, construct_indecomposable<Scalar>(q, *only, field));
      } else {
        for (const auto& e : all_indecomposables<Scalar>(q, field).entries) check(e.root, e.rep);
      }
      std::sort(out.begin(), out.end(), [](const UdrLine& x, const UdrLine& y) { return x.root < y.root; });
      return out;
    });

    const auto total = lines.size();
    const auto verified = static_cast<std::size_t>(std::count_if(lines.begin(), lines.end(), [](const UdrLine& l) {
      return l.dims_ok && l.report.verdict == UdrVerdict::isomorphic_to_k;
    }));
    const bool ok = verified == total;
    const std::string summary = std::string(ok ? "THEOREM VERIFIED: " : "THEOREM FAILED: ") + std::to_string(verified) +
                                "/" + std::to_string(total) + " indecomposables have R(kQ,M) ≅ k";
    const int code = ok ? 0 : static_cast<int>(ExitCode::internal);

    if (opts.format == OutputFormat::json) {
      json entries = json::array();
      for (const auto& l : lines) entries.push_back(udr_json(l));
      json result = {{"types", type_names(classify(q))},
                     {"entries", entries},
                     {"verified", verified},
                     {"total", total},
                     {"summary", summary}};
      return {code, dump(envelope("verify-udr", q, field, result)), ""};
    }
    std::vector<std::vector<std::string>> rows{{"root", "end", "ext", "verdict"}};
    for (const auto& l : lines)
      rows.push_back({l.root.to_string(), std::to_string(l.report.end_dim), std::to_string(l.report.ext_dim),
                      l.report.verdict_text()});
    std::string out = "quiver " + q.name() + " [" + join(type_names(classify(q)), ", ") + "] over " +
                      field.name() + "\n" + table(rows) + summary + "\n";
    return {code, out, ""};
  });
}

CommandResult cmd_udr(const CommandInput& quiver, const CommandInput& rep, const CommandOptions& opts) {
  return guarded([&]() -> CommandResult {
    const Quiver q = load_quiver(quiver);
    const ParsedRep parsed = load_rep(rep, q);
    return std::visit(
        [&](const auto& m) -> CommandResult {
          const UdrLine line{m.dims(), udr_report(m), true};
          if (opts.format == OutputFormat::json) {
            json result = udr_json(line);
            result["name"] = parsed.name;
            return {0, dump(envelope("udr", q, m.field(), result)), ""};
          }
          std::string out = table({{"representation", parsed.name + " (" + m.dims().to_string() + ")"},
                                   {"field", m.field().name()},
                                   {"dim End", std::to_string(line.report.end_dim)},
                                   {"dim Ext1", std::to_string(line.report.ext_dim)},
                                   {"verdict", line.report.verdict_text()}});
          return {0, out, ""};
        },
        parsed.rep);
  });
}

}  // namespace qrep
