#pragma once

// Exact scalar fields: arbitrary-precision rationals and prime fields F_p.
//
// Both scalar types plug into Eigen through NumTraits, so dense matrices are
// plain Eigen::Matrix<Scalar, Dynamic, Dynamic>. Elimination never goes
// through Eigen's floating-point decompositions; see linalg.hpp.

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

#include "qrep/errors.hpp"

namespace qrep {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

class FieldSpec {
 public:
  enum class Kind { rationals, prime };

  static FieldSpec rationals() { return FieldSpec{}; }
  /// Throws ParseError unless `p` is a prime below 2^31.
  static FieldSpec prime(std::uint32_t p);
  /// Parses `Q` or `F<p>`.
  static FieldSpec parse(std::string_view text);

  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  [[nodiscard]] bool is_rationals() const noexcept { return kind_ == Kind::rationals; }
  [[nodiscard]] std::uint32_t characteristic() const noexcept { return p_; }
  [[nodiscard]] std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec() = default;
  FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_ = Kind::rationals;
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// Element of F_p with the modulus carried alongside the value.
///
/// Eigen constructs scalars from integer literals (Scalar(0), Scalar(1)) with
/// no access to the modulus; such values are "unbound" (modulus 0) and adopt
/// the modulus of whatever bound operand they meet.
class Zp {
 public:
  Zp() = default;
  Zp(long long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Zp(long long value, std::uint32_t p) : value_(reduce(value, p)), p_(p) {}

  [[nodiscard]] std::uint32_t modulus() const noexcept { return p_; }
  /// Canonical residue in [0, p); the raw integer for unbound values.
  [[nodiscard]] long long value() const noexcept { return value_; }
  [[nodiscard]] bool is_zero() const noexcept { return value_ == 0; }

  [[nodiscard]] Zp inverse() const;

  Zp& operator+=(const Zp& o);
  Zp& operator-=(const Zp& o);
  Zp& operator*=(const Zp& o);
  Zp& operator/=(const Zp& o) { return *this *= o.inverse(); }

  friend Zp operator+(Zp a, const Zp& b) { return a += b; }
  friend Zp operator-(Zp a, const Zp& b) { return a -= b; }
  friend Zp operator*(Zp a, const Zp& b) { return a *= b; }
  friend Zp operator/(Zp a, const Zp& b) { return a /= b; }
  friend Zp operator-(const Zp& a) { return Zp{} - a; }
  friend Zp operator+(const Zp& a) { return a; }

  friend bool operator==(const Zp& a, const Zp& b);
  friend bool operator!=(const Zp& a, const Zp& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Zp& x);

 private:
  static long long reduce(long long v, std::uint32_t p) {
    if (p == 0) return v;
    long long r = v % static_cast<long long>(p);
    return r < 0 ? r + p : r;
  }
  static std::uint32_t common_modulus(const Zp& a, const Zp& b);

  long long value_ = 0;
  std::uint32_t p_ = 0;
};

// Eigen occasionally asks for these; they only make sense as identity ops here.
inline const Zp& conj(const Zp& x) { return x; }
inline const Zp& real(const Zp& x) { return x; }
inline Zp imag(const Zp&) { return Zp{}; }
inline Zp abs2(const Zp& x) { return x * x; }

/// Per-scalar field operations used by every generic algorithm.
template <class Scalar>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static bool accepts(const FieldSpec& f) { return f.is_rationals(); }
  static Rational from_int(const FieldSpec&, long long v) { return Rational(v); }
  static bool is_zero(const Rational& x) { return x.is_zero(); }
  static Rational inverse(const Rational& x) { return Rational(1) / x; }
  static std::string to_string(const Rational& x);
  /// Accepts `a` or `a/b` with optional leading sign.
  static Rational parse(const FieldSpec& f, std::string_view text);
};

template <>
struct FieldTraits<Zp> {
  static bool accepts(const FieldSpec& f) { return !f.is_rationals(); }
  static Zp from_int(const FieldSpec& f, long long v) { return Zp(v, f.characteristic()); }
  static bool is_zero(const Zp& x) { return x.is_zero(); }
  static Zp inverse(const Zp& x) { return x.inverse(); }
  static std::string to_string(const Zp& x) { return std::to_string(x.value()); }
  /// Accepts integers and `a/b` (interpreted as a * b^-1 mod p).
  static Zp parse(const FieldSpec& f, std::string_view text);
};

/// Calls `fn(std::type_identity<Scalar>{})` with the scalar type that models `field`.
template <class Fn>
decltype(auto) visit_field(const FieldSpec& field, Fn&& fn) {
  if (field.is_rationals()) return std::forward<Fn>(fn)(std::type_identity<Rational>{});
  return std::forward<Fn>(fn)(std::type_identity<Zp>{});
}

}  // namespace qrep

namespace Eigen {

template <>
struct NumTraits<qrep::Zp> : GenericNumTraits<qrep::Zp> {
  using Real = qrep::Zp;
  using NonInteger = qrep::Zp;
  using Literal = qrep::Zp;
  using Nested = qrep::Zp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4,
  };
  static inline int digits10() { return 0; }
  static inline qrep::Zp epsilon() { return qrep::Zp{}; }
  static inline qrep::Zp dummy_precision() { return qrep::Zp{}; }
};

}  // namespace Eigen
