#include "qrep/quiver.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qrep/linalg.hpp"

namespace qrep {

using Eigen::Index;

Quiver::Quiver(std::vector<std::string> vertex_labels, std::vector<Arrow> arrows, std::string name)
    : name_(std::move(name)), labels_(std::move(vertex_labels)), arrows_(std::move(arrows)) {
  if (labels_.empty()) throw std::invalid_argument("a quiver needs at least one vertex");
  std::set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second) throw std::invalid_argument("duplicate vertex label '" + l + "'");
  seen.clear();
  for (const auto& a : arrows_) {
    if (!seen.insert(a.id).second) throw std::invalid_argument("duplicate arrow id '" + a.id + "'");
    if (a.source < 0 || a.source >= vertex_count() || a.target < 0 || a.target >= vertex_count())
      throw std::invalid_argument("arrow '" + a.id + "' references a missing vertex");
  }
}

Quiver Quiver::from_edges(Index vertex_count, const std::vector<std::pair<Index, Index>>& edges,
                          std::string name) {
  std::vector<std::string> labels;
  for (Index v = 0; v < vertex_count; ++v) labels.push_back(std::to_string(v + 1));
  std::vector<Arrow> arrows;
  for (std::size_t k = 0; k < edges.size(); ++k)
    arrows.push_back({"a" + std::to_string(k + 1), edges[k].first, edges[k].second});
  return Quiver(std::move(labels), std::move(arrows), std::move(name));
}

std::optional<Index> Quiver::vertex_index(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Index>(it - labels_.begin());
}

std::optional<Index> Quiver::arrow_index(const std::string& id) const {
  auto it = std::find_if(arrows_.begin(), arrows_.end(), [&](const Arrow& a) { return a.id == id; });
  if (it == arrows_.end()) return std::nullopt;
  return static_cast<Index>(it - arrows_.begin());
}

bool Quiver::is_sink(Index v) const {
  return std::none_of(arrows_.begin(), arrows_.end(), [v](const Arrow& a) { return a.source == v; });
}

bool Quiver::is_source(Index v) const {
  return std::none_of(arrows_.begin(), arrows_.end(), [v](const Arrow& a) { return a.target == v; });
}

Quiver Quiver::reversed_at(Index v) const {
  Quiver out = *this;
  for (auto& a : out.arrows_)
    if ((a.source == v) != (a.target == v)) std::swap(a.source, a.target);
  return out;
}

Quiver Quiver::with_name(std::string name) const {
  Quiver out = *this;
  out.name_ = std::move(name);
  return out;
}

DimVector::DimVector(IntVector coords) : coords_(std::move(coords)) {
  if ((coords_.array() < 0).any()) throw std::invalid_argument("dimension vectors are non-negative");
}

DimVector::DimVector(std::initializer_list<long long> coords)
    : DimVector(IntVector(Eigen::Map<const IntVector>(coords.begin(), static_cast<Index>(coords.size())))) {}

DimVector DimVector::unit(Index n, Index i) {
  IntVector v = IntVector::Zero(n);
  v(i) = 1;
  return DimVector(std::move(v));
}

std::string DimVector::to_string() const {
  std::string out;
  for (Index i = 0; i < size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coords_(i));
  }
  return out;
}

std::strong_ordering operator<=>(const DimVector& a, const DimVector& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  for (Index i = 0; i < a.size(); ++i)
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

namespace {

void check_size(const Quiver& q, const IntVector& v) {
  if (v.size() != q.vertex_count())
    throw MismatchError("vector of length " + std::to_string(v.size()) + " for a quiver with " +
                        std::to_string(q.vertex_count()) + " vertices");
}

}  // namespace

long long euler_form(const Quiver& q, const IntVector& m, const IntVector& n) {
  check_size(q, m);
  check_size(q, n);
  long long value = m.dot(n);
  for (const auto& a : q.arrows()) value -= m(a.source) * n(a.target);
  return value;
}

long long tits_form(const Quiver& q, const IntVector& n) { return euler_form(q, n, n); }

IntMatrix symmetrized_matrix(const Quiver& q) {
  const Index n = q.vertex_count();
  IntMatrix b = 2 * IntMatrix::Identity(n, n);
  for (const auto& a : q.arrows()) {
    b(a.source, a.target) -= 1;
    b(a.target, a.source) -= 1;
  }
  return b;
}

namespace {

bool positive_definite(const IntMatrix& b) {
  const auto minors = leading_principal_minors(b.cast<BigInt>().eval());
  if (static_cast<Index>(minors.size()) < b.rows()) return false;
  return std::all_of(minors.begin(), minors.end(), [](const BigInt& m) { return m > 0; });
}

}  // namespace

bool is_positive_definite(const Quiver& q) { return positive_definite(symmetrized_matrix(q)); }

std::string DynkinType::name() const {
  const char letter = family == Family::A ? 'A' : family == Family::D ? 'D' : 'E';
  return std::string(1, letter) + std::to_string(rank);
}

std::optional<DynkinType> DynkinType::parse(const std::string& text) {
  if (text.size() < 2) return std::nullopt;
  int rank = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9' || rank > 100000) return std::nullopt;
    rank = rank * 10 + (text[i] - '0');
  }
  switch (text[0]) {
    case 'A':
      if (rank >= 1) return DynkinType{Family::A, rank};
      break;
    case 'D':
      if (rank >= 4) return DynkinType{Family::D, rank};
      break;
    case 'E':
      if (rank >= 6 && rank <= 8) return DynkinType{Family::E, rank};
      break;
    default:
      break;
  }
  return std::nullopt;
}

bool Classification::is_finite() const {
  return std::all_of(components.begin(), components.end(),
                     [](const QuiverComponent& c) { return c.type.has_value(); });
}

std::vector<DynkinType> Classification::types() const {
  std::vector<DynkinType> out;
  for (const auto& c : components)
    if (c.type) out.push_back(*c.type);
  return out;
}

std::string Classification::witness() const {
  for (const auto& c : components)
    if (!c.type) return c.reason;
  return {};
}

namespace {

// Shape analysis of one connected component; `vertices` ascending.
QuiverComponent recognize(const Quiver& q, std::vector<Index> vertices) {
  QuiverComponent comp{std::move(vertices), std::nullopt, {}};
  const auto& vs = comp.vertices;
  std::set<Index> members(vs.begin(), vs.end());
  std::map<std::pair<Index, Index>, int> multiplicity;
  std::map<Index, std::vector<Index>> neighbours;
  for (const auto& a : q.arrows()) {
    if (!members.count(a.source)) continue;
    if (a.source == a.target) {
      comp.reason = "loop at vertex " + q.label(a.source);
      return comp;
    }
    auto key = std::minmax(a.source, a.target);
    if (++multiplicity[key] > 1) {
      comp.reason = "parallel edges between " + q.label(key.first) + " and " + q.label(key.second);
      return comp;
    }
    neighbours[a.source].push_back(a.target);
    neighbours[a.target].push_back(a.source);
  }
  const auto n = static_cast<long long>(vs.size());
  if (static_cast<long long>(multiplicity.size()) != n - 1) {
    comp.reason = "cycle in the underlying graph";
    return comp;
  }

  std::vector<Index> branch;
  for (Index v : vs) {
    const auto degree = neighbours[v].size();
    if (degree > 3) {
      comp.reason = "vertex " + q.label(v) + " has degree " + std::to_string(degree);
      return comp;
    }
    if (degree == 3) branch.push_back(v);
  }
  if (branch.size() > 1) {
    comp.reason = "two branch vertices (" + q.label(branch[0]) + ", " + q.label(branch[1]) + ")";
    return comp;
  }
  if (branch.empty()) {
    comp.type = DynkinType{DynkinType::Family::A, static_cast<int>(n)};
    return comp;
  }

  // Arm lengths from the branch vertex; the component is a tree so arms are paths.
  std::vector<int> arms;
  const Index centre = branch.front();
  for (Index start : neighbours[centre]) {
    int length = 1;
    Index prev = centre;
    Index cur = start;
    while (neighbours[cur].size() == 2) {
      Index next = neighbours[cur][0] == prev ? neighbours[cur][1] : neighbours[cur][0];
      prev = cur;
      cur = next;
      ++length;
    }
    arms.push_back(length);
  }
  std::sort(arms.begin(), arms.end());
  const int rank = static_cast<int>(n);
  if (arms[0] == 1 && arms[1] == 1) {
    comp.type = DynkinType{DynkinType::Family::D, rank};
  } else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
    comp.type = DynkinType{DynkinType::Family::E, rank};
  } else {
    comp.reason = "branch vertex " + q.label(centre) + " with arms " + std::to_string(arms[0]) + "," +
                  std::to_string(arms[1]) + "," + std::to_string(arms[2]);
  }
  return comp;
}

}  // namespace

Classification classify(const Quiver& q) {
  const Index n = q.vertex_count();
  std::vector<Index> parent(static_cast<std::size_t>(n));
  for (Index v = 0; v < n; ++v) parent[static_cast<std::size_t>(v)] = v;
  auto find = [&](Index v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
    return v;
  };
  for (const auto& a : q.arrows()) {
    Index x = find(a.source), y = find(a.target);
    if (x != y) parent[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
  }
  std::map<Index, std::vector<Index>> groups;  // keyed by smallest member
  for (Index v = 0; v < n; ++v) groups[find(v)].push_back(v);

  const IntMatrix b = symmetrized_matrix(q);
  Classification out;
  for (auto& [root, vs] : groups) {
    QuiverComponent comp = recognize(q, vs);
    const Eigen::Map<const Eigen::Matrix<Index, Eigen::Dynamic, 1>> idx(vs.data(), static_cast<Index>(vs.size()));
    const IntMatrix block = b(idx, idx);
    if (comp.type.has_value() != positive_definite(block))
      throw InvariantViolation("graph-shape classification disagrees with Tits-form positivity on the component of vertex " +
                               q.label(root));
    out.components.push_back(std::move(comp));
  }
  return out;
}

void require_finite_type(const Quiver& q) {
  const auto c = classify(q);
  if (!c.is_finite())
    throw InfiniteTypeError("quiver is not of finite representation type: Tits form is not positive definite (" +
                            c.witness() + ")");
}

std::string orientation_name(Orientation o) {
  switch (o) {
    case Orientation::linear: return "linear";
    case Orientation::reversed: return "reversed";
    case Orientation::alternating: return "alternating";
    case Orientation::inward: return "inward";
  }
  return "?";
}

std::vector<Orientation> all_orientations() {
  return {Orientation::linear, Orientation::reversed, Orientation::alternating, Orientation::inward};
}

Quiver dynkin_quiver(DynkinType type, Orientation orientation) {
  const Index n = type.rank;
  std::vector<std::pair<Index, Index>> edges;  // undirected, lower index first
  Index centre = (n - 1) / 2;
  switch (type.family) {
    case DynkinType::Family::A:
      for (Index v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      break;
    case DynkinType::Family::D:
      if (n < 4) throw std::invalid_argument("D_n needs n >= 4");
      for (Index v = 0; v + 2 < n; ++v) edges.emplace_back(v, v + 1);
      edges.emplace_back(n - 3, n - 1);
      centre = n - 3;
      break;
    case DynkinType::Family::E:
      if (n < 6 || n > 8) throw std::invalid_argument("E_n needs 6 <= n <= 8");
      for (Index v = 0; v + 2 < n; ++v) edges.emplace_back(v, v + 1);
      edges.emplace_back(2, n - 1);
      centre = 2;
      break;
  }

  std::vector<std::vector<Index>> adj(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  // BFS depth from a root vertex gives both the bipartite colouring and distance to centre.
  auto depth_from = [&](Index root) {
    std::vector<Index> depth(static_cast<std::size_t>(n), -1);
    std::vector<Index> queue{root};
    depth[static_cast<std::size_t>(root)] = 0;
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (Index w : adj[static_cast<std::size_t>(queue[k])])
        if (depth[static_cast<std::size_t>(w)] < 0) {
          depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(queue[k])] + 1;
          queue.push_back(w);
        }
    return depth;
  };

  std::vector<std::pair<Index, Index>> arrows;
  const auto colour = depth_from(0);
  const auto dist = depth_from(centre);
  for (auto [u, v] : edges) {
    switch (orientation) {
      case Orientation::linear: arrows.emplace_back(u, v); break;
      case Orientation::reversed: arrows.emplace_back(v, u); break;
      case Orientation::alternating:
        if (colour[static_cast<std::size_t>(u)] % 2 == 0) arrows.emplace_back(u, v);
        else arrows.emplace_back(v, u);
        break;
      case Orientation::inward:
        if (dist[static_cast<std::size_t>(u)] > dist[static_cast<std::size_t>(v)]) arrows.emplace_back(u, v);
        else arrows.emplace_back(v, u);
        break;
    }
  }
  return Quiver::from_edges(n, arrows, type.name() + "-" + orientation_name(orientation));
}

Quiver kronecker_quiver() { return Quiver::from_edges(2, {{0, 1}, {0, 1}}, "kronecker"); }

Quiver cyclic_quiver(Index n) {
  std::vector<std::pair<Index, Index>> arrows;
  for (Index v = 0; v < n; ++v) arrows.emplace_back(v, (v + 1) % n);
  return Quiver::from_edges(n, arrows, "cycle" + std::to_string(n));
}

Quiver extended_d4_quiver() {
  return Quiver::from_edges(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}}, "extended-D4");
}

}  // namespace qrep
