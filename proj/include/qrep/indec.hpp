#pragma once

// Indecomposable representations of Dynkin quivers, built with the
// Bernstein-Gelfand-Ponomarev reflection functors.
//
// C_i^+ (i a sink) replaces V_i by the kernel of (+)_{a: t(a)=i} V_s(a) -> V_i;
// C_i^- (i a source) replaces V_i by the cokernel of V_i -> (+)_{a: s(a)=i} V_t(a).
// Both reverse the arrows at i.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "qrep/rep.hpp"
#include "qrep/roots.hpp"

namespace qrep {

/// A positive root walked down to a simple root by reflections at successive sinks.
struct ReflectionWalk {
  std::vector<Eigen::Index> sinks;  ///< vertex reflected at step k
  std::vector<DimVector> dims;      ///< dims[k+1] = s_{sinks[k]}(dims[k]); dims.back() = e_j
  std::vector<Quiver> quivers;      ///< quivers[k+1] = quivers[k] reversed at sinks[k]
  Eigen::Index simple_vertex = 0;   ///< the j with dims.back() = e_j
};

/// Sinks are taken in admissible order: within each round, the lowest-indexed
/// vertex that is a sink of the current orientation and has not been used yet.
/// Throws InfiniteTypeError / NotARootError on bad input and InvariantViolation
/// if the walk does not reach a simple root within the Coxeter bound.
ReflectionWalk root_walk(const Quiver& q, const DimVector& d);

template <class Scalar>
Representation<Scalar> reflect_at_sink(const Representation<Scalar>& m, Eigen::Index i) {
  const Quiver& q = m.quiver();
  if (i < 0 || i >= q.vertex_count() || !q.is_sink(i))
    throw std::invalid_argument("reflect_at_sink: vertex is not a sink");

  std::vector<Eigen::Index> incoming;
  Eigen::Index total = 0;
  for (Eigen::Index a = 0; a < q.arrow_count(); ++a)
    if (q.arrow(a).target == i) {
      incoming.push_back(a);
      total += m.dim(q.arrow(a).source);
    }

  Mat<Scalar> assembled(m.dim(i), total);
  Eigen::Index col = 0;
  for (auto a : incoming) {
    assembled.middleCols(col, m.map(a).cols()) = m.map(a);
    col += m.map(a).cols();
  }
  const Mat<Scalar> inclusion = kernel_basis(assembled);

  IntVector dims = m.dims().coords();
  dims(i) = inclusion.cols();
  MatrixFamily<Scalar> maps = m.maps();
  Eigen::Index row = 0;
  for (auto a : incoming) {
    const Eigen::Index rows = m.dim(q.arrow(a).source);
    maps[static_cast<std::size_t>(a)] = inclusion.middleRows(row, rows);
    row += rows;
  }
  return Representation<Scalar>(q.reversed_at(i), m.field(), DimVector(std::move(dims)), std::move(maps));
}

template <class Scalar>
Representation<Scalar> reflect_at_source(const Representation<Scalar>& m, Eigen::Index i) {
  const Quiver& q = m.quiver();
  if (i < 0 || i >= q.vertex_count() || !q.is_source(i))
    throw std::invalid_argument("reflect_at_source: vertex is not a source");

  std::vector<Eigen::Index> outgoing;
  Eigen::Index total = 0;
  for (Eigen::Index a = 0; a < q.arrow_count(); ++a)
    if (q.arrow(a).source == i) {
      outgoing.push_back(a);
      total += m.dim(q.arrow(a).target);
    }

  Mat<Scalar> assembled(total, m.dim(i));
  Eigen::Index row = 0;
  for (auto a : outgoing) {
    assembled.middleRows(row, m.map(a).rows()) = m.map(a);
    row += m.map(a).rows();
  }
  const Mat<Scalar> projection = cokernel_projection(assembled);

  IntVector dims = m.dims().coords();
  dims(i) = projection.rows();
  MatrixFamily<Scalar> maps = m.maps();
  Eigen::Index col = 0;
  for (auto a : outgoing) {
    const Eigen::Index cols = m.dim(q.arrow(a).target);
    maps[static_cast<std::size_t>(a)] = projection.middleCols(col, cols);
    col += cols;
  }
  return Representation<Scalar>(q.reversed_at(i), m.field(), DimVector(std::move(dims)), std::move(maps));
}

/// The indecomposable with dimension vector d: start from the simple S_j that
/// the root walk ends at and undo the walk with C^- functors.
template <class Scalar>
Representation<Scalar> construct_indecomposable(const Quiver& q, const DimVector& d, FieldSpec field) {
  const ReflectionWalk walk = root_walk(q, d);
  auto m = Representation<Scalar>::simple(walk.quivers.back(), field, walk.simple_vertex);
  for (std::size_t k = walk.sinks.size(); k-- > 0;) {
    m = reflect_at_source(m, walk.sinks[k]);
    if (!(m.dims() == walk.dims[k]) || !(m.quiver() == walk.quivers[k]))
      throw InvariantViolation("reflection functor changed dimensions off the root walk at step " +
                               std::to_string(k));
  }
  return Representation<Scalar>(q, field, m.dims(), m.maps());
}

template <class Scalar>
struct IndecEntry {
  DimVector root;
  Representation<Scalar> rep;
};

template <class Scalar>
struct IndecCatalog {
  Quiver quiver;
  FieldSpec field;
  std::vector<IndecEntry<Scalar>> entries;  ///< in root order

  [[nodiscard]] std::size_t size() const noexcept { return entries.size(); }
};

/// One indecomposable per positive root.
template <class Scalar>
IndecCatalog<Scalar> all_indecomposables(const Quiver& q, FieldSpec field) {
  const RootSet roots = positive_roots(q);
  IndecCatalog<Scalar> catalog{q, field, {}};
  catalog.entries.reserve(roots.size());
  for (const auto& r : roots.roots)
    catalog.entries.push_back({r, construct_indecomposable<Scalar>(q, r, field)});
  return catalog;
}

/// Entries drawn from [-5, 5] over Q and uniformly from F_p.
template <class Scalar>
Representation<Scalar> random_representation(const Quiver& q, FieldSpec field, const DimVector& d,
                                              std::mt19937_64& rng) {
  const bool rational = field.is_rationals();
  std::uniform_int_distribution<long long> dist(rational ? -5 : 0,
                                                rational ? 5 : static_cast<long long>(field.characteristic()) - 1);
  MatrixFamily<Scalar> maps;
  for (const auto& a : q.arrows()) {
    Mat<Scalar> m(d[a.target], d[a.source]);
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = FieldTraits<Scalar>::from_int(field, dist(rng));
    maps.push_back(std::move(m));
  }
  return Representation<Scalar>(q, field, d, std::move(maps));
}

inline constexpr int generic_oracle_retry_cap = 50;

/// A random representation of dimension d, redrawn until it is Schur. For a
/// positive root of a Dynkin quiver the generic representation is the
/// indecomposable, so this is an independent route to construct_indecomposable.
template <class Scalar>
Representation<Scalar> generic_rep_oracle(const Quiver& q, const DimVector& d, FieldSpec field, std::uint64_t seed) {
  if (!field.is_rationals() && field.characteristic() < 101)
    throw std::invalid_argument("generic_rep_oracle needs Q or F_p with p >= 101");
  require_finite_type(q);
  if (!is_positive_root(q, d))
    throw NotARootError("dimension vector " + d.to_string() + " is not a positive root", tits_form(q, d));
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < generic_oracle_retry_cap; ++attempt) {
    auto m = random_representation<Scalar>(q, field, d, rng);
    if (is_schur(m)) return m;
  }
  throw RetryCapExceeded("no Schur representation of dimension " + d.to_string() + " after " +
                         std::to_string(generic_oracle_retry_cap) + " draws");
}

}  // namespace qrep
