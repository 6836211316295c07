#include "qrep/indec.hpp"

#include <algorithm>

namespace qrep {

using Eigen::Index;

namespace {

std::optional<Index> unit_index(const IntVector& d) {
  Index where = -1;
  for (Index i = 0; i < d.size(); ++i) {
    if (d(i) == 0) continue;
    if (d(i) != 1 || where >= 0) return std::nullopt;
    where = i;
  }
  if (where < 0) return std::nullopt;
  return where;
}

}  // namespace

ReflectionWalk root_walk(const Quiver& q, const DimVector& d) {
  require_finite_type(q);
  if (d.size() != q.vertex_count()) throw MismatchError("dimension vector length does not match the quiver");
  if (!is_positive_root(q, d))
    throw NotARootError("dimension vector " + d.to_string() + " is not a positive root (q = " +
                            std::to_string(tits_form(q, d)) + ")",
                        tits_form(q, d));

  const Index n = q.vertex_count();
  const IntMatrix b = symmetrized_matrix(q);
  // Coxeter numbers are at most max(n + 1, 2n - 2, 30), so every positive root
  // reaches a simple one within that many full rounds of n reflections.
  const Index bound = n * std::max<Index>({n + 1, 2 * n - 2, 30}) + n;

  ReflectionWalk walk;
  walk.dims.push_back(d);
  walk.quivers.push_back(q);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  IntVector cur = d.coords();

  while (true) {
    if (auto j = unit_index(cur)) {
      walk.simple_vertex = *j;
      return walk;
    }
    if (static_cast<Index>(walk.sinks.size()) >= bound)
      throw InvariantViolation("root walk for " + d.to_string() + " did not reach a simple root");

    const Quiver& orient = walk.quivers.back();
    if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) std::fill(used.begin(), used.end(), false);
    Index sink = -1;
    for (Index v = 0; v < n && sink < 0; ++v)
      if (!used[static_cast<std::size_t>(v)] && orient.is_sink(v)) sink = v;
    if (sink < 0) throw InvariantViolation("no admissible sink in an acyclic orientation");

    IntVector next = cur;
    next(sink) -= b.col(sink).dot(cur);
    if ((next.array() < 0).any())
      throw InvariantViolation("reflection of a non-simple positive root left the positive cone");

    used[static_cast<std::size_t>(sink)] = true;
    walk.sinks.push_back(sink);
    walk.quivers.push_back(orient.reversed_at(sink));
    walk.dims.emplace_back(next);
    cur = std::move(next);
  }
}

}  // namespace qrep
