#include "qrep/roots.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qrep {

using Eigen::Index;

namespace {

std::vector<long long> to_std(const IntVector& v) { return {v.data(), v.data() + v.size()}; }

IntVector reflect(const IntMatrix& b, Index i, const IntVector& d) {
  IntVector out = d;
  out(i) -= b.col(i).dot(d);
  return out;
}

}  // namespace

bool RootSet::contains(const DimVector& d) const {
  return std::binary_search(roots.begin(), roots.end(), d);
}

IntVector simple_reflection(const Quiver& q, Index i, const IntVector& d) {
  if (i < 0 || i >= q.vertex_count()) throw std::invalid_argument("simple_reflection: vertex out of range");
  if (d.size() != q.vertex_count()) throw MismatchError("simple_reflection: vector has wrong length");
  const IntMatrix b = symmetrized_matrix(q);
  if (b(i, i) != 2) throw std::invalid_argument("simple_reflection: loop at vertex " + q.label(i));
  return reflect(b, i, d);
}

RootSet positive_roots(const Quiver& q) {
  require_finite_type(q);
  const Index n = q.vertex_count();
  const IntMatrix b = symmetrized_matrix(q);

  // Breadth-first over the whole (finite) root system; negative roots stay in
  // the frontier because positive roots are reached through them.
  std::set<std::vector<long long>> seen;
  std::vector<IntVector> frontier;
  for (Index i = 0; i < n; ++i) {
    IntVector e = IntVector::Zero(n);
    e(i) = 1;
    if (seen.insert(to_std(e)).second) frontier.push_back(e);
  }
  for (std::size_t k = 0; k < frontier.size(); ++k) {
    for (Index i = 0; i < n; ++i) {
      IntVector r = reflect(b, i, frontier[k]);
      if (seen.insert(to_std(r)).second) frontier.push_back(std::move(r));
    }
  }

  RootSet out{q, {}};
  for (const auto& r : frontier)
    if ((r.array() >= 0).all()) out.roots.emplace_back(r);
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

bool is_positive_root(const Quiver& q, const DimVector& d) {
  return d.size() == q.vertex_count() && !d.is_zero() && tits_form(q, d) == 1;
}

std::size_t expected_root_count(DynkinType type) {
  const auto n = static_cast<std::size_t>(type.rank);
  switch (type.family) {
    case DynkinType::Family::A: return n * (n + 1) / 2;
    case DynkinType::Family::D: return n * (n - 1);
    case DynkinType::Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
  }
  return 0;
}

std::vector<std::pair<DynkinType, std::size_t>> root_count_table(int max_rank) {
  if (max_rank < 0 || max_rank > 8) throw std::invalid_argument("root_count_table: max_rank must be in [0, 8]");
  std::vector<std::pair<DynkinType, std::size_t>> table;
  auto add = [&](DynkinType t) { table.emplace_back(t, positive_roots(dynkin_quiver(t)).size()); };
  for (int n = 1; n <= max_rank; ++n) add({DynkinType::Family::A, n});
  for (int n = 4; n <= max_rank; ++n) add({DynkinType::Family::D, n});
  for (int n = 6; n <= max_rank; ++n) add({DynkinType::Family::E, n});
  return table;
}

}  // namespace qrep
