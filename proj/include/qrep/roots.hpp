#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qrep/quiver.hpp"

namespace qrep {

/// Positive roots of a finite-type quiver: the non-zero d >= 0 with q(d) = 1,
/// sorted lexicographically.
struct RootSet {
  Quiver quiver;
  std::vector<DimVector> roots;

  [[nodiscard]] std::size_t size() const noexcept { return roots.size(); }
  [[nodiscard]] bool contains(const DimVector& d) const;
};

/// s_i(d) = d - (d^T B e_i) e_i. Throws std::invalid_argument if there is a loop at i.
IntVector simple_reflection(const Quiver& q, Eigen::Index i, const IntVector& d);

/// Closure of the simple roots under all simple reflections, restricted to the
/// non-negative orthant. Throws InfiniteTypeError for quivers not of finite type.
RootSet positive_roots(const Quiver& q);

/// d >= 0, d != 0 and q(d) = 1.
bool is_positive_root(const Quiver& q, const DimVector& d);

/// |positive roots| for every Dynkin type of rank <= max_rank (A1.., D4.., E6..E8),
/// counted by enumeration. max_rank must be at most 8.
std::vector<std::pair<DynkinType, std::size_t>> root_count_table(int max_rank);

/// Closed-form root counts: n(n+1)/2, n(n-1), 36, 63, 120.
std::size_t expected_root_count(DynkinType type);

}  // namespace qrep
