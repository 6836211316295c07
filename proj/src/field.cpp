#include "qrep/field.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <tuple>
#include <utility>

namespace qrep {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

BigInt parse_bigint(std::string_view s, std::string_view whole) {
  if (!is_integer_literal(s)) throw ParseError("invalid number '" + std::string(whole) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s));
}

// Splits "a/b" into numerator and denominator text; denominator empty if absent.
std::pair<std::string_view, std::string_view> split_fraction(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return {text, {}};
  return {trim(text.substr(0, slash)), trim(text.substr(slash + 1))};
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw ParseError("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
  return FieldSpec{Kind::prime, p};
}

FieldSpec FieldSpec::parse(std::string_view text) {
  text = trim(text);
  if (text == "Q") return rationals();
  if (text.size() >= 2 && text.front() == 'F') {
    std::uint64_t p = 0;
    auto digits = text.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc{} && ptr == digits.data() + digits.size()) {
      if (p > std::numeric_limits<std::uint32_t>::max())
        throw ParseError("field characteristic too large: '" + std::string(text) + "'");
      return prime(static_cast<std::uint32_t>(p));
    }
  }
  throw ParseError("unknown field '" + std::string(text) + "' (expected Q or F<p>)");
}

std::string FieldSpec::name() const {
  return is_rationals() ? std::string("Q") : "F" + std::to_string(p_);
}

std::uint32_t Zp::common_modulus(const Zp& a, const Zp& b) {
  if (a.p_ == 0) return b.p_;
  if (b.p_ != 0 && a.p_ != b.p_)
    throw MismatchError("arithmetic between F" + std::to_string(a.p_) + " and F" +
                        std::to_string(b.p_));
  return a.p_;
}

Zp& Zp::operator+=(const Zp& o) {
  p_ = common_modulus(*this, o);
  value_ = reduce(reduce(value_, p_) + reduce(o.value_, p_), p_);
  return *this;
}

Zp& Zp::operator-=(const Zp& o) {
  p_ = common_modulus(*this, o);
  value_ = reduce(reduce(value_, p_) - reduce(o.value_, p_), p_);
  return *this;
}

Zp& Zp::operator*=(const Zp& o) {
  p_ = common_modulus(*this, o);
  if (p_ == 0) {
    value_ *= o.value_;
    return *this;
  }
  // Both residues are below 2^31, so the product fits in 64 bits.
  auto prod = static_cast<std::uint64_t>(reduce(value_, p_)) *
              static_cast<std::uint64_t>(reduce(o.value_, p_));
  value_ = static_cast<long long>(prod % p_);
  return *this;
}

Zp Zp::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in F_p");
  if (p_ == 0) {
    if (value_ == 1 || value_ == -1) return *this;
    throw std::domain_error("inverse of an unbound F_p constant");
  }
  // Extended Euclid on (value, p).
  long long r0 = p_, r1 = value_, t0 = 0, t1 = 1;
  while (r1 != 0) {
    long long q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
  }
  return Zp(t0, p_);
}

bool operator==(const Zp& a, const Zp& b) {
  std::uint32_t p = a.p_ != 0 ? a.p_ : b.p_;
  return Zp::reduce(a.value_, p) == Zp::reduce(b.value_, p);
}

std::ostream& operator<<(std::ostream& os, const Zp& x) { return os << x.value(); }

std::string FieldTraits<Rational>::to_string(const Rational& x) {
  auto num = boost::multiprecision::numerator(x);
  auto den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational FieldTraits<Rational>::parse(const FieldSpec&, std::string_view text) {
  text = trim(text);
  auto [num, den] = split_fraction(text);
  BigInt n = parse_bigint(num, text);
  if (den.empty()) return Rational(n);
  BigInt d = parse_bigint(den, text);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

Zp FieldTraits<Zp>::parse(const FieldSpec& f, std::string_view text) {
  text = trim(text);
  auto [num, den] = split_fraction(text);
  const std::uint32_t p = f.characteristic();
  auto residue = [&](std::string_view s) {
    BigInt v = parse_bigint(s, text) % p;
    if (v < 0) v += p;
    return Zp(v.convert_to<long long>(), p);
  };
  Zp value = residue(num);
  if (den.empty()) return value;
  Zp d = residue(den);
  if (d.is_zero())
    throw ParseError("denominator of '" + std::string(text) + "' vanishes in " + f.name());
  return value / d;
}

}  // namespace qrep
