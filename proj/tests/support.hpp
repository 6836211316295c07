#pragma once

// Random generators and brute-force oracles shared by the test suites. Nothing
// here calls into the elimination code it is used to check.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "qrep/deform.hpp"
#include "qrep/indec.hpp"
#include "qrep/rep.hpp"

namespace qrep::testing {

inline FieldSpec F(std::uint32_t p) { return FieldSpec::prime(p); }
inline const FieldSpec QQ = FieldSpec::rationals();

/// Random integer in [lo, hi].
inline long long uniform(std::mt19937_64& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

template <class Scalar>
Scalar random_scalar(std::mt19937_64& rng, const FieldSpec& field) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    // Mostly small integers, sometimes a fraction.
    long long num = uniform(rng, -4, 4);
    long long den = uniform(rng, 0, 3) == 0 ? uniform(rng, 1, 5) : 1;
    return Rational(num, den);
  } else {
    return Zp(uniform(rng, 0, field.characteristic() - 1), field.characteristic());
  }
}

/// Random matrix whose rank is often deficient (rows built from a few random generators).
template <class Scalar>
Mat<Scalar> random_matrix(std::mt19937_64& rng, const FieldSpec& field, Eigen::Index rows, Eigen::Index cols) {
  Mat<Scalar> m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = random_scalar<Scalar>(rng, field);
  if (rows > 1 && uniform(rng, 0, 2) == 0) {
    // Replace the last row by a combination of the others.
    m.row(rows - 1).setZero();
    for (Eigen::Index r = 0; r + 1 < rows; ++r) m.row(rows - 1) += random_scalar<Scalar>(rng, field) * m.row(r);
  }
  return m;
}

/// Determinant by Laplace expansion along the first row.
template <class Scalar>
Scalar laplace_det(const Mat<Scalar>& a) {
  const Eigen::Index n = a.rows();
  if (n == 0) return Scalar(1);
  if (n == 1) return a(0, 0);
  Scalar total = a(0, 0) - a(0, 0);
  for (Eigen::Index j = 0; j < n; ++j) {
    Mat<Scalar> minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r)
      for (Eigen::Index c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = a(r, c);
    Scalar term = a(0, j) * laplace_det(minor);
    if (j % 2) total -= term;
    else total += term;
  }
  return total;
}

/// Rank as the largest k with a non-vanishing k x k minor.
template <class Scalar>
Eigen::Index minor_rank(const Mat<Scalar>& a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  for (Eigen::Index k = std::min(rows, cols); k > 0; --k) {
    std::vector<Eigen::Index> rsel(static_cast<std::size_t>(k)), csel(static_cast<std::size_t>(k));
    std::function<bool(std::vector<Eigen::Index>&, Eigen::Index, Eigen::Index, const std::function<bool()>&)> choose =
        [&](std::vector<Eigen::Index>& sel, Eigen::Index pos, Eigen::Index from, const std::function<bool()>& leaf) {
          if (pos == static_cast<Eigen::Index>(sel.size())) return leaf();
          const Eigen::Index limit = &sel == &rsel ? rows : cols;
          for (Eigen::Index v = from; v < limit; ++v) {
            sel[static_cast<std::size_t>(pos)] = v;
            if (choose(sel, pos + 1, v + 1, leaf)) return true;
          }
          return false;
        };
    const bool found = choose(rsel, 0, 0, [&] {
      return choose(csel, 0, 0, [&] {
        Mat<Scalar> sub(k, k);
        for (Eigen::Index r = 0; r < k; ++r)
          for (Eigen::Index c = 0; c < k; ++c) sub(r, c) = a(rsel[static_cast<std::size_t>(r)], csel[static_cast<std::size_t>(c)]);
        return !FieldTraits<Scalar>::is_zero(laplace_det(sub));
      });
    });
    if (found) return k;
  }
  return 0;
}

/// Random quiver on n vertices, possibly with loops and parallel arrows.
inline Quiver random_quiver(std::mt19937_64& rng, Eigen::Index n, int arrows, bool allow_loops = true) {
  std::vector<std::pair<Eigen::Index, Eigen::Index>> edges;
  for (int k = 0; k < arrows; ++k) {
    Eigen::Index s = uniform(rng, 0, n - 1), t = uniform(rng, 0, n - 1);
    if (!allow_loops && s == t) continue;
    edges.emplace_back(s, t);
  }
  return Quiver::from_edges(n, edges, "random");
}

/// A random orientation of a random Dynkin diagram of rank <= max_rank.
inline Quiver random_dynkin_quiver(std::mt19937_64& rng, int max_rank) {
  std::vector<DynkinType> types;
  for (int n = 1; n <= max_rank; ++n) types.push_back({DynkinType::Family::A, n});
  for (int n = 4; n <= max_rank; ++n) types.push_back({DynkinType::Family::D, n});
  for (int n = 6; n <= std::min(max_rank, 8); ++n) types.push_back({DynkinType::Family::E, n});
  const auto t = types[static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(types.size()) - 1))];
  Quiver q = dynkin_quiver(t, Orientation::linear);
  // Flip each arrow independently.
  std::vector<std::pair<Eigen::Index, Eigen::Index>> edges;
  for (const auto& a : q.arrows())
    if (uniform(rng, 0, 1)) edges.emplace_back(a.target, a.source);
    else edges.emplace_back(a.source, a.target);
  return Quiver::from_edges(q.vertex_count(), edges, t.name() + "-random");
}

inline DimVector random_dims(std::mt19937_64& rng, const Quiver& q, long long max) {
  IntVector d(q.vertex_count());
  for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = uniform(rng, 0, max);
  return DimVector(d);
}

template <class Scalar>
Representation<Scalar> random_rep(std::mt19937_64& rng, const Quiver& q, const FieldSpec& field, const DimVector& d) {
  MatrixFamily<Scalar> maps;
  const bool sparse = uniform(rng, 0, 3) == 0;
  for (const auto& a : q.arrows()) {
    Mat<Scalar> m = random_matrix<Scalar>(rng, field, d[a.target], d[a.source]);
    if (sparse && uniform(rng, 0, 1)) m.setZero();
    maps.push_back(std::move(m));
  }
  return Representation<Scalar>(q, field, d, std::move(maps));
}

/// |Hom(M, N)| over F_p by enumerating every vertex-indexed family and testing
/// the commutation rule directly. Only for tiny instances.
inline std::size_t brute_force_hom_count(const Representation<Zp>& m, const Representation<Zp>& n) {
  const auto p = static_cast<long long>(m.field().characteristic());
  std::vector<std::pair<Eigen::Index, Eigen::Index>> shapes;
  Eigen::Index entries = 0;
  for (Eigen::Index i = 0; i < m.quiver().vertex_count(); ++i) {
    shapes.emplace_back(n.dim(i), m.dim(i));
    entries += n.dim(i) * m.dim(i);
  }
  std::vector<long long> digits(static_cast<std::size_t>(entries), 0);
  std::size_t count = 0;
  while (true) {
    MatrixFamily<Zp> u;
    std::size_t k = 0;
    for (auto [r, c] : shapes) {
      Mat<Zp> b(r, c);
      for (Eigen::Index x = 0; x < r; ++x)
        for (Eigen::Index y = 0; y < c; ++y) b(x, y) = Zp(digits[k++], static_cast<std::uint32_t>(p));
      u.push_back(std::move(b));
    }
    if (is_morphism(m, n, u)) ++count;
    std::size_t pos = 0;
    while (pos < digits.size() && ++digits[pos] == p) digits[pos++] = 0;
    if (pos == digits.size()) break;
  }
  return count;
}

/// All n with 0 <= n_i <= bound, n != 0 and q(n) = 1, lexicographic.
inline std::vector<DimVector> box_roots(const Quiver& q, long long bound) {
  const Eigen::Index n = q.vertex_count();
  std::vector<DimVector> out;
  IntVector v = IntVector::Zero(n);
  while (true) {
    Eigen::Index pos = n - 1;
    while (pos >= 0 && v(pos) == bound) v(pos--) = 0;
    if (pos < 0) break;
    ++v(pos);
    if (tits_form(q, v) == 1) out.emplace_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<DynkinType> dynkin_types_up_to(int max_rank) {
  std::vector<DynkinType> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back({DynkinType::Family::A, n});
  for (int n = 4; n <= max_rank; ++n) out.push_back({DynkinType::Family::D, n});
  for (int n = 6; n <= std::min(8, max_rank); ++n) out.push_back({DynkinType::Family::E, n});
  return out;
}

}  // namespace qrep::testing
