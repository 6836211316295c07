#include "qrep/io.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace qrep {

namespace {

/// One logical line with a cursor; columns are 1-based.
class LineCursor {
 public:
  LineCursor(std::string_view line, int number) : line_(line), number_(number) {}

  [[nodiscard]] int number() const { return number_; }
  [[nodiscard]] int column() const { return static_cast<int>(pos_) + 1; }
  [[nodiscard]] bool at_end() {
    skip_space();
    return pos_ >= line_.size();
  }

  void skip_space() {
    while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, number_, column()); }

  bool try_consume(std::string_view token) {
    skip_space();
    if (line_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!try_consume(token)) fail("expected '" + std::string(token) + "'");
  }

  /// Maximal run of characters that are not whitespace and not in `stops`.
  std::string word(std::string_view what, std::string_view stops = {}) {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < line_.size() && !std::isspace(static_cast<unsigned char>(line_[pos_])) &&
           stops.find(line_[pos_]) == std::string_view::npos)
      ++pos_;
    if (pos_ == start) fail("expected " + std::string(what));
    return std::string(line_.substr(start, pos_ - start));
  }

  std::string rest() {
    skip_space();
    std::string_view r = line_.substr(pos_);
    while (!r.empty() && std::isspace(static_cast<unsigned char>(r.back()))) r.remove_suffix(1);
    pos_ = line_.size();
    return std::string(r);
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing text");
  }

 private:
  std::string_view line_;
  int number_;
  std::size_t pos_ = 0;
};

/// Non-blank lines with comments stripped.
std::vector<LineCursor> logical_lines(std::string_view text) {
  std::vector<LineCursor> lines;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    ++number;
    const auto nl = text.find('\n', start);
    const auto end = nl == std::string_view::npos ? text.size() : nl;
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    LineCursor cursor(line, number);
    if (!cursor.at_end()) lines.emplace_back(line, number);
    start = end + 1;
  }
  return lines;
}

}  // namespace

Quiver parse_quiver(std::string_view text) {
  auto lines = logical_lines(text);
  if (lines.empty()) throw ParseError("empty quiver file", 1, 1);

  auto& header = lines.front();
  header.expect("quiver");
  const std::string name = header.rest();
  if (name.empty()) header.fail("expected a quiver name");

  std::vector<std::string> labels;
  std::vector<Arrow> arrows;
  std::map<std::string, Eigen::Index> index;
  std::set<std::string> ids;
  bool have_vertices = false;

  for (std::size_t k = 1; k < lines.size(); ++k) {
    auto& line = lines[k];
    if (line.try_consume("vertices")) {
      if (have_vertices) line.fail("duplicate vertices line");
      line.expect(":");
      have_vertices = true;
      while (!line.at_end()) {
        const int col = line.column();  // at_end() skipped the blanks
        std::string v = line.word("a vertex name");
        if (index.count(v)) throw ParseError("duplicate vertex '" + v + "'", line.number(), col);
        index.emplace(v, static_cast<Eigen::Index>(labels.size()));
        labels.push_back(std::move(v));
      }
      if (labels.empty()) line.fail("a quiver needs at least one vertex");
    } else if (line.try_consume("arrow")) {
      if (!have_vertices) line.fail("arrow declared before the vertices line");
      line.skip_space();
      const int col = line.column();
      std::string id = line.word("an arrow id", ":");
      if (!ids.insert(id).second) throw ParseError("duplicate arrow id '" + id + "'", line.number(), col);
      line.expect(":");
      auto endpoint = [&](std::string_view what) {
        line.skip_space();
        const int c = line.column();
        std::string v = line.word(what, "-");
        auto it = index.find(v);
        if (it == index.end()) throw ParseError("undeclared vertex '" + v + "'", line.number(), c);
        return it->second;
      };
      const auto src = endpoint("a source vertex");
      line.expect("->");
      const auto dst = endpoint("a target vertex");
      line.expect_end();
      arrows.push_back({std::move(id), src, dst});
    } else {
      line.fail("expected 'vertices:' or 'arrow'");
    }
  }
  if (!have_vertices) throw ParseError("missing vertices line", lines.front().number(), 1);
  return Quiver(std::move(labels), std::move(arrows), name);
}

std::string format_quiver(const Quiver& q) {
  std::string out = "quiver " + (q.name().empty() ? std::string("Q") : q.name()) + "\nvertices:";
  for (const auto& l : q.vertex_labels()) out += " " + l;
  out += "\n";
  for (const auto& a : q.arrows()) out += "arrow " + a.id + ": " + q.label(a.source) + " -> " + q.label(a.target) + "\n";
  return out;
}

namespace {

struct Cell {
  std::string text;
  int column = 0;
};

struct MatrixLiteral {
  int line = 0;
  std::vector<std::vector<Cell>> rows;
};

// Parses "[[...], [...]]".
MatrixLiteral parse_matrix_literal(LineCursor& line) {
  MatrixLiteral lit{line.number(), {}};
  auto& rows = lit.rows;
  line.expect("[");
  if (line.try_consume("]")) return lit;
  do {
    line.expect("[");
    std::vector<Cell> row;
    if (!line.try_consume("]")) {
      do {
        line.skip_space();
        const int col = line.column();
        row.push_back({line.word("a matrix entry", ",]"), col});
      } while (line.try_consume(","));
      line.expect("]");
    }
    rows.push_back(std::move(row));
  } while (line.try_consume(","));
  line.expect("]");
  return lit;
}

template <class Scalar>
Representation<Scalar> build_rep(const Quiver& q, const FieldSpec& field, const IntVector& dims,
                                 const std::vector<std::optional<MatrixLiteral>>& maps) {
  MatrixFamily<Scalar> out;
  for (Eigen::Index a = 0; a < q.arrow_count(); ++a) {
    const auto& arrow = q.arrow(a);
    const Eigen::Index rows = dims(arrow.target), cols = dims(arrow.source);
    const auto& entry = maps[static_cast<std::size_t>(a)];
    if (!entry) {
      if (rows * cols != 0) throw ParseError("missing map for arrow '" + arrow.id + "'");
      out.push_back(Mat<Scalar>::Zero(rows, cols));
      continue;
    }
    const int line = entry->line;
    const auto& cells = entry->rows;
    if (static_cast<Eigen::Index>(cells.size()) != rows)
      throw ParseError("map '" + arrow.id + "' has " + std::to_string(cells.size()) + " rows, expected " +
                           std::to_string(rows),
                       line, 1);
    Mat<Scalar> m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
      const auto& row = cells[static_cast<std::size_t>(r)];
      if (static_cast<Eigen::Index>(row.size()) != cols)
        throw ParseError("map '" + arrow.id + "' row " + std::to_string(r + 1) + " has " +
                             std::to_string(row.size()) + " entries, expected " + std::to_string(cols),
                         line, 1);
      for (Eigen::Index c = 0; c < cols; ++c) {
        const Cell& cell = row[static_cast<std::size_t>(c)];
        try {
          m(r, c) = FieldTraits<Scalar>::parse(field, cell.text);
        } catch (const ParseError& e) {
          throw ParseError(e.what(), line, cell.column);
        }
      }
    }
    out.push_back(std::move(m));
  }
  return Representation<Scalar>(q, field, DimVector(dims), std::move(out));
}

}  // namespace

ParsedRep parse_rep(std::string_view text, const Quiver& q) {
  auto lines = logical_lines(text);
  if (lines.empty()) throw ParseError("empty representation file", 1, 1);

  auto& header = lines.front();
  header.expect("rep");
  std::string name = header.word("a representation name");
  header.expect("over");
  header.skip_space();
  const int field_col = header.column();
  const std::string field_text = header.word("a field");
  header.expect_end();
  std::optional<FieldSpec> field;
  try {
    field = FieldSpec::parse(field_text);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), header.number(), field_col);
  }

  IntVector dims = IntVector::Zero(q.vertex_count());
  std::vector<bool> dim_seen(static_cast<std::size_t>(q.vertex_count()), false);
  std::vector<std::optional<MatrixLiteral>> maps(static_cast<std::size_t>(q.arrow_count()));

  for (std::size_t k = 1; k < lines.size(); ++k) {
    auto& line = lines[k];
    if (line.try_consume("dim")) {
      const std::string v = line.word("a vertex name", "=");
      auto idx = q.vertex_index(v);
      if (!idx) throw MismatchError("line " + std::to_string(line.number()) + ": vertex '" + v + "' is not in quiver " + q.name());
      if (dim_seen[static_cast<std::size_t>(*idx)]) line.fail("duplicate dim for vertex '" + v + "'");
      dim_seen[static_cast<std::size_t>(*idx)] = true;
      line.expect("=");
      line.skip_space();
      const int col = line.column();
      const std::string n = line.word("a dimension");
      long long value = -1;
      auto [ptr, ec] = std::from_chars(n.data(), n.data() + n.size(), value);
      if (ec != std::errc{} || ptr != n.data() + n.size() || value < 0)
        throw ParseError("invalid dimension '" + n + "'", line.number(), col);
      line.expect_end();
      dims(*idx) = value;
    } else if (line.try_consume("map")) {
      const std::string id = line.word("an arrow id", "=");
      auto idx = q.arrow_index(id);
      if (!idx) throw MismatchError("line " + std::to_string(line.number()) + ": arrow '" + id + "' is not in quiver " + q.name());
      if (maps[static_cast<std::size_t>(*idx)]) line.fail("duplicate map for arrow '" + id + "'");
      line.expect("=");
      auto literal = parse_matrix_literal(line);
      line.expect_end();
      maps[static_cast<std::size_t>(*idx)] = std::move(literal);
    } else {
      line.fail("expected 'dim' or 'map'");
    }
  }

  return visit_field(*field, [&](auto tag) -> ParsedRep {
    using Scalar = typename decltype(tag)::type;
    return {name, AnyRepresentation(build_rep<Scalar>(q, *field, dims, maps))};
  });
}

DimVector parse_dim_vector(std::string_view text, const Quiver& q) {
  IntVector v(q.vertex_count());
  Eigen::Index k = 0;
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    std::string_view part = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    long long value = -1;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size() || value < 0)
      throw ParseError("invalid dimension vector '" + std::string(text) + "'", 1, static_cast<int>(pos) + 1);
    if (k >= v.size())
      throw ParseError("dimension vector '" + std::string(text) + "' has more than " +
                       std::to_string(q.vertex_count()) + " coordinates");
    v(k++) = value;
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (k != v.size())
    throw ParseError("dimension vector '" + std::string(text) + "' needs " + std::to_string(q.vertex_count()) +
                     " coordinates");
  return DimVector(std::move(v));
}

}  // namespace qrep
