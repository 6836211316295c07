#include "qrep/linalg.hpp"

#include <gmp.h>

namespace qrep {

namespace {

// a = a / d, where d is known to divide a exactly.
void divide_exact(BigInt& a, const BigInt& d) {
  mpz_divexact(a.backend().data(), a.backend().data(), d.backend().data());
}

}  // namespace

namespace detail {

// Fraction-free Gauss-Jordan (Bareiss). Each row is first cleared of
// denominators, which changes neither the row space nor the pivot pattern.
// After processing k pivots every entry is a k x k (or (k+1) x (k+1)) minor of
// the cleared matrix, so the division by the previous pivot is exact.
Echelon<Rational> fraction_free_rref(const Mat<Rational>& a) {
  const Index rows = a.rows();
  const Index cols = a.cols();
  Mat<BigInt> m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    BigInt l = 1;
    for (Index j = 0; j < cols; ++j) {
      const BigInt den = boost::multiprecision::denominator(a(i, j));
      if (den != 1) l = boost::multiprecision::lcm(l, den);
    }
    for (Index j = 0; j < cols; ++j)
      m(i, j) = boost::multiprecision::numerator(a(i, j)) * (l / boost::multiprecision::denominator(a(i, j)));
  }

  std::vector<Index> pivots;
  BigInt previous = 1;
  BigInt tmp;
  Index row = 0;
  for (Index col = 0; col < cols && row < rows; ++col) {
    Index p = row;
    while (p < rows && m(p, col) == 0) ++p;
    if (p == rows) continue;
    if (p != row) m.row(p).swap(m.row(row));
    const BigInt pivot = m(row, col);
    for (Index i = 0; i < rows; ++i) {
      if (i == row) continue;
      const BigInt factor = m(i, col);
      for (Index j = 0; j < cols; ++j) {
        // m(i,j) <- (pivot * m(i,j) - factor * m(row,j)) / previous
        BigInt& x = m(i, j);
        if (x == 0 && (factor == 0 || m(row, j) == 0)) continue;
        x *= pivot;
        if (factor != 0 && m(row, j) != 0) {
          tmp = factor * m(row, j);
          x -= tmp;
        }
        divide_exact(x, previous);
      }
    }
    previous = pivot;
    pivots.push_back(col);
    ++row;
  }

  // Every pivot entry now equals the last pivot; normalize.
  Echelon<Rational> out{Mat<Rational>::Zero(rows, cols), std::move(pivots)};
  for (std::size_t k = 0; k < out.pivots.size(); ++k) {
    const auto i = static_cast<Index>(k);
    const BigInt& d = m(i, out.pivots[k]);
    for (Index j = 0; j < cols; ++j)
      if (m(i, j) != 0) out.reduced(i, j) = Rational(m(i, j), d);
  }
  return out;
}

}  // namespace detail

std::vector<BigInt> leading_principal_minors(const Mat<BigInt>& a) {
  if (a.rows() != a.cols()) throw MismatchError("leading_principal_minors: matrix is not square");
  const Index n = a.rows();
  Mat<BigInt> m = a;
  std::vector<BigInt> minors;
  BigInt previous = 1;
  for (Index k = 0; k < n; ++k) {
    minors.push_back(m(k, k));
    if (m(k, k) == 0) break;
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        m(i, j) = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        divide_exact(m(i, j), previous);
      }
      m(i, k) = 0;
    }
    previous = m(k, k);
  }
  return minors;
}

}  // namespace qrep
