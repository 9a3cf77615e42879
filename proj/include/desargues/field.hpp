#pragma once

// Exact scalars: arbitrary-precision rationals and residues modulo an odd
// prime. Both types keep a canonical representation, so equality of values
// is equality of representations.

#include <array>
#include <charconv>
#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "desargues/error.hpp"

namespace desargues {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

// Deterministic Miller-Rabin; these bases cover every 64-bit integer.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto p : bases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (auto a : bases) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline BigInt parse_integer(std::string_view text) {
  if (text.empty()) fail(ErrorKind::SyntaxError, "empty integer literal");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) fail(ErrorKind::SyntaxError, "sign without digits");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') fail(ErrorKind::SyntaxError, "bad digit in '" + std::string(text) + "'");
  }
  BigInt value(std::string(text.substr(i)));
  return text[0] == '-' ? BigInt(-value) : value;
}

}  // namespace detail

enum class FieldKind { Rationals, PrimeField };

/// Which field a computation lives in. Characteristic 2 (and any composite
/// modulus) is rejected at construction.
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(FieldKind::Rationals, 0); }

  static FieldSpec prime(std::uint64_t p) {
    if (p == 2) fail(ErrorKind::InvalidField, "characteristic 2 is not supported");
    if (p >= (std::uint64_t{1} << 62)) fail(ErrorKind::InvalidField, "modulus too large");
    if (!detail::is_prime(p)) fail(ErrorKind::InvalidField, std::to_string(p) + " is not prime");
    return FieldSpec(FieldKind::PrimeField, p);
  }

  /// For moduli already validated (e.g. recovered from a Residue).
  static FieldSpec trusted_prime(std::uint64_t p) { return FieldSpec(FieldKind::PrimeField, p); }

  FieldKind kind() const noexcept { return kind_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  bool is_ordered() const noexcept { return kind_ == FieldKind::Rationals; }

  std::string to_string() const { return kind_ == FieldKind::Rationals ? "Q" : "Fp " + std::to_string(modulus_); }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(FieldKind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

  FieldKind kind_;
  std::uint64_t modulus_;
};

class Rational {
 public:
  Rational() = default;
  Rational(long long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& n) : value_(n) {}

  Rational(const BigInt& n, const BigInt& d) {
    if (d == 0) fail(ErrorKind::ZeroDenominator, "denominator is zero");
    value_ = Value(n) / Value(d);
  }

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }
  bool is_zero() const { return value_ == 0; }
  int sign() const { return value_.sign(); }

  Rational abs() const { return value_ < 0 ? Rational(-value_) : *this; }

  Rational operator-() const { return Rational(-value_); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) fail(ErrorKind::ZeroDenominator, "division by zero");
    value_ /= o.value_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  double to_double() const { return value_.convert_to<double>(); }

  std::string to_string() const {
    auto d = denominator();
    return d == 1 ? numerator().str() : numerator().str() + "/" + d.str();
  }

 private:
  using Value = boost::multiprecision::cpp_rational;
  explicit Rational(Value v) : value_(std::move(v)) {}

  Value value_;
};

/// Element of F_p. Carries its modulus so arithmetic needs no context; mixing
/// moduli is an error.
class Residue {
 public:
  Residue(long long n, std::uint64_t p) : modulus_(p) {
    auto m = static_cast<long long>(p);
    long long r = n % m;
    value_ = static_cast<std::uint64_t>(r < 0 ? r + m : r);
  }

  Residue(const BigInt& n, std::uint64_t p) : modulus_(p) {
    BigInt r = n % p;
    if (r < 0) r += p;
    value_ = r.convert_to<std::uint64_t>();
  }

  std::uint64_t value() const noexcept { return value_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }

  Residue pow(std::uint64_t e) const { return raw(detail::pow_mod(value_, e, modulus_), modulus_); }

  Residue inverse() const {
    if (is_zero()) fail(ErrorKind::ZeroDenominator, "zero has no inverse mod " + std::to_string(modulus_));
    return pow(modulus_ - 2);
  }

  Residue operator-() const { return raw(value_ == 0 ? 0 : modulus_ - value_, modulus_); }
  Residue& operator+=(const Residue& o) {
    check(o);
    value_ += o.value_;
    if (value_ >= modulus_) value_ -= modulus_;
    return *this;
  }
  Residue& operator-=(const Residue& o) { return *this += -o; }
  Residue& operator*=(const Residue& o) {
    check(o);
    value_ = detail::mul_mod(value_, o.value_, modulus_);
    return *this;
  }
  Residue& operator/=(const Residue& o) {
    check(o);
    return *this *= o.inverse();
  }
  friend Residue operator+(Residue a, const Residue& b) { return a += b; }
  friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
  friend Residue operator*(Residue a, const Residue& b) { return a *= b; }
  friend Residue operator/(Residue a, const Residue& b) { return a /= b; }
  friend bool operator==(const Residue&, const Residue&) = default;

  std::string to_string() const { return std::to_string(value_); }

 private:
  static Residue raw(std::uint64_t v, std::uint64_t p) {
    Residue r(0, p);
    r.value_ = v;
    return r;
  }
  void check(const Residue& o) const {
    if (o.modulus_ != modulus_) fail(ErrorKind::FieldMismatch, "residues modulo different primes");
  }

  std::uint64_t value_;
  std::uint64_t modulus_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const Residue& x) { return os << x.to_string(); }

inline FieldSpec field_of(const Rational&) { return FieldSpec::rationals(); }
inline FieldSpec field_of(const Residue& x) { return FieldSpec::trusted_prime(x.modulus()); }

/// Canonical reduced n/d.
inline Rational make_rational(const BigInt& n, const BigInt& d) { return Rational(n, d); }

inline bool is_perfect_square(const BigInt& n) {
  if (n < 0) return false;
  BigInt r = boost::multiprecision::sqrt(n);
  return r * r == n;
}

inline bool is_square(const Rational& x) {
  return x.sign() >= 0 && is_perfect_square(x.numerator()) && is_perfect_square(x.denominator());
}

/// Euler's criterion.
inline bool is_square(const Residue& x) {
  return x.is_zero() || x.pow((x.modulus() - 1) / 2).value() == 1;
}

/// Nonnegative root.
inline Rational sqrt(const Rational& x) {
  if (!is_square(x)) fail(ErrorKind::NotASquare, x.to_string() + " is not a square in Q");
  return Rational(boost::multiprecision::sqrt(x.numerator()), boost::multiprecision::sqrt(x.denominator()));
}

/// Least-residue root, by Tonelli-Shanks.
inline Residue sqrt(const Residue& x) {
  const std::uint64_t p = x.modulus();
  if (!is_square(x)) fail(ErrorKind::NotASquare, x.to_string() + " is not a square mod " + std::to_string(p));
  if (x.is_zero()) return x;
  std::uint64_t q = p - 1;
  int s = 0;
  while ((q & 1U) == 0) {
    q >>= 1U;
    ++s;
  }
  std::uint64_t z = 2;
  while (detail::pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t c = detail::pow_mod(z, q, p);
  std::uint64_t r = detail::pow_mod(x.value(), (q + 1) / 2, p);
  std::uint64_t t = detail::pow_mod(x.value(), q, p);
  int m = s;
  while (t != 1) {
    int i = 0;
    std::uint64_t t2 = t;
    while (t2 != 1) {
      t2 = detail::mul_mod(t2, t2, p);
      ++i;
    }
    std::uint64_t b = c;
    for (int j = 0; j < m - i - 1; ++j) b = detail::mul_mod(b, b, p);
    r = detail::mul_mod(r, b, p);
    c = detail::mul_mod(b, b, p);
    t = detail::mul_mod(t, c, p);
    m = i;
  }
  std::uint64_t other = p - r;
  return Residue(static_cast<long long>(r < other ? r : other), p);
}

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool ordered = true;
  static Rational from_integer(const FieldSpec&, const BigInt& n) { return Rational(n); }
  static Rational make(const FieldSpec&, const BigInt& n, const BigInt& d) { return Rational(n, d); }
  static bool canonical_less(const Rational& a, const Rational& b) { return a < b; }
};

template <>
struct scalar_traits<Residue> {
  static constexpr bool ordered = false;
  static Residue from_integer(const FieldSpec& f, const BigInt& n) { return Residue(n, f.modulus()); }
  static Residue make(const FieldSpec& f, const BigInt& n, const BigInt& d) {
    Residue den(d, f.modulus());
    if (den.is_zero()) fail(ErrorKind::ZeroDenominator, "denominator vanishes mod " + std::to_string(f.modulus()));
    return Residue(n, f.modulus()) / den;
  }
  static bool canonical_less(const Residue& a, const Residue& b) { return a.value() < b.value(); }
};

/// What the geometry templates require of a coordinate type.
template <class S>
concept Scalar = std::copyable<S> && std::equality_comparable<S> && requires(const S a, const S b) {
  { a + b } -> std::same_as<S>;
  { a - b } -> std::same_as<S>;
  { a * b } -> std::same_as<S>;
  { a / b } -> std::same_as<S>;
  { -a } -> std::same_as<S>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.to_string() } -> std::same_as<std::string>;
  { field_of(a) } -> std::same_as<FieldSpec>;
  { is_square(a) } -> std::convertible_to<bool>;
  { scalar_traits<S>::ordered } -> std::convertible_to<bool>;
};

template <Scalar S>
inline constexpr bool is_ordered_v = scalar_traits<S>::ordered;

template <Scalar S>
S from_int(const FieldSpec& field, long long n) {
  return scalar_traits<S>::from_integer(field, BigInt(n));
}

/// Same field as `like`.
template <Scalar S>
S constant_like(const S& like, long long n) {
  return from_int<S>(field_of(like), n);
}

/// n/d in the given field; ZeroDenominator when d vanishes there.
template <Scalar S>
S make_scalar(const FieldSpec& field, const BigInt& n, const BigInt& d = 1) {
  return scalar_traits<S>::make(field, n, d);
}

template <Scalar S>
bool canonical_less(const S& a, const S& b) {
  return scalar_traits<S>::canonical_less(a, b);
}

/// Parses `n` or `n/d` into the field.
template <Scalar S>
S parse_scalar(const FieldSpec& field, std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return make_scalar<S>(field, detail::parse_integer(text));
  return make_scalar<S>(field, detail::parse_integer(text.substr(0, slash)),
                        detail::parse_integer(text.substr(slash + 1)));
}

}  // namespace desargues
