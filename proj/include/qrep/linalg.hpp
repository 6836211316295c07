#pragma once

// Exact dense linear algebra over Q and F_p.
//
// Everything is derived from one canonical reduced row echelon form: pivots
// are taken in column order, each from the lowest-indexed remaining row with a
// nonzero entry. The reduced form is unique, so kernel and cokernel bases are
// deterministic regardless of the elimination route.

#include <Eigen/Core>

#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "qrep/field.hpp"

namespace qrep {

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

template <class Scalar>
struct Echelon {
  Mat<Scalar> reduced;          ///< reduced row echelon form, same shape as the input
  std::vector<Index> pivots;    ///< pivot column of row k, for k < rank
};

namespace detail {

Echelon<Rational> fraction_free_rref(const Mat<Rational>& a);

template <class Scalar>
Echelon<Scalar> gauss_jordan(const Mat<Scalar>& a) {
  using F = FieldTraits<Scalar>;
  Echelon<Scalar> out{a, {}};
  Mat<Scalar>& m = out.reduced;
  if constexpr (std::is_same_v<Scalar, Zp>) {
    // Bind integer constants that came from Eigen literals to the matrix's modulus.
    std::uint32_t p = 0;
    for (Index k = 0; k < m.size() && p == 0; ++k) p = m.data()[k].modulus();
    if (p != 0)
      for (Index k = 0; k < m.size(); ++k) m.data()[k] = Zp(m.data()[k].value(), p);
  }
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index p = row;
    while (p < m.rows() && F::is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    if (p != row) m.row(p).swap(m.row(row));
    const Scalar inv = F::inverse(m(row, col));
    m.row(row) *= inv;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == row || F::is_zero(m(i, col))) continue;
      const Scalar factor = m(i, col);
      m.row(i) -= factor * m.row(row);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

}  // namespace detail

/// Canonical reduced row echelon form. Fraction-free over Q, plain Gauss-Jordan over F_p.
template <class Scalar>
Echelon<Scalar> reduced_echelon(const Mat<Scalar>& a) {
  if constexpr (std::is_same_v<Scalar, Rational>)
    return detail::fraction_free_rref(a);
  else
    return detail::gauss_jordan(a);
}

template <class Scalar>
Index rank(const Mat<Scalar>& a) {
  return static_cast<Index>(reduced_echelon(a).pivots.size());
}

namespace detail {

template <class Scalar>
Mat<Scalar> kernel_from_echelon(const Echelon<Scalar>& e, Index cols) {
  const Index r = static_cast<Index>(e.pivots.size());
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  Mat<Scalar> basis = Mat<Scalar>::Zero(cols, cols - r);
  Index k = 0;
  for (Index free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(free, k) = Scalar(1);
    for (Index i = 0; i < r; ++i) basis(e.pivots[static_cast<std::size_t>(i)], k) = -e.reduced(i, free);
    ++k;
  }
  return basis;
}

}  // namespace detail

/// Basis of {x : a x = 0}, one vector per column; one vector per non-pivot column.
template <class Scalar>
Mat<Scalar> kernel_basis(const Mat<Scalar>& a) {
  return detail::kernel_from_echelon(reduced_echelon(a), a.cols());
}

/// Standard basis vectors e_j whose classes form a basis of target / im(a),
/// one per column. The j are the non-pivot columns of the echelon form of a^T.
template <class Scalar>
Mat<Scalar> cokernel_basis(const Mat<Scalar>& a) {
  const Mat<Scalar> at = a.transpose();
  const auto e = reduced_echelon(at);
  const Index n = a.rows();
  std::vector<bool> in_image(static_cast<std::size_t>(n), false);
  for (Index c : e.pivots) in_image[static_cast<std::size_t>(c)] = true;
  Mat<Scalar> reps = Mat<Scalar>::Zero(n, n - static_cast<Index>(e.pivots.size()));
  Index k = 0;
  for (Index j = 0; j < n; ++j)
    if (!in_image[static_cast<std::size_t>(j)]) reps(j, k++) = Scalar(1);
  return reps;
}

/// Surjection P : target -> target / im(a) with ker P = im(a); rows span the left kernel of a.
template <class Scalar>
Mat<Scalar> cokernel_projection(const Mat<Scalar>& a) {
  const Mat<Scalar> at = a.transpose();
  return kernel_basis(at).transpose();
}

/// Some x with a x = b, or nullopt when the system is inconsistent. Free variables are set to 0.
template <class Scalar>
std::optional<Vec<Scalar>> solve(const Mat<Scalar>& a, const Vec<Scalar>& b) {
  if (b.size() != a.rows()) throw MismatchError("solve: right-hand side has wrong length");
  Mat<Scalar> augmented(a.rows(), a.cols() + 1);
  augmented << a, b;
  const auto e = reduced_echelon(augmented);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vec<Scalar> x = Vec<Scalar>::Zero(a.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    x(e.pivots[i]) = e.reduced(static_cast<Index>(i), a.cols());
  return x;
}

/// Leading principal minors of a square integer matrix, computed by one Bareiss pass
/// without pivoting. Stops early (returning the minors so far, the last being 0) at the
/// first vanishing minor.
std::vector<BigInt> leading_principal_minors(const Mat<BigInt>& a);

}  // namespace qrep
