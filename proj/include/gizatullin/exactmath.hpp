#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace giz {

using Integer = boost::multiprecision::cpp_int;

/// Self-intersection number of a curve in a dual graph.
using Weight = std::int64_t;

/// Ordered weights of a linear chain of curves.
using Chain = std::vector<Weight>;

/// Narrows an arbitrary-precision integer; throws std::overflow_error when the
/// value does not fit.
std::int64_t to_int64(const Integer& value);

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long long value);  // NOLINT(google-explicit-constructor)
  Rational(Integer value);    // NOLINT(google-explicit-constructor)
  Rational(Integer numerator, Integer denominator);

  /// Accepts "p" or "p/q" (optional leading '-', no whitespace).
  static Rational parse(std::string_view text);

  const Integer& numerator() const { return num_; }
  const Integer& denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  /// Largest integer not exceeding the value, so floor(-1/3) = -1.
  Integer floor() const;
  /// value - floor(value); always in [0, 1).
  Rational frac() const;

  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void normalize();

  Integer num_ = 0;
  Integer den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

/// Box label e/m abbreviating the chain whose continued fraction
/// [k_1,...,k_n] = k_1 - 1/(k_2 - ...) equals m/e. (0,1) is the empty box.
class BoxLabel {
 public:
  BoxLabel() = default;
  /// Throws std::invalid_argument unless 0 <= e < m, gcd(e, m) = 1, and
  /// e = 0 only together with m = 1.
  BoxLabel(std::int64_t e, std::int64_t m);

  /// The box labelled by the fractional part of `value`.
  static BoxLabel from_fraction(const Rational& value);

  std::int64_t e() const { return e_; }
  std::int64_t m() const { return m_; }
  bool empty() const { return e_ == 0; }

  friend bool operator==(const BoxLabel&, const BoxLabel&) = default;

 private:
  std::int64_t e_ = 0;
  std::int64_t m_ = 1;
};

std::ostream& operator<<(std::ostream& os, const BoxLabel& label);

/// Hirzebruch-Jung expansion of m/e; every weight is <= -2.
Chain hj_chain(const BoxLabel& label);

/// Inverse of hj_chain. Throws ChainNotAdmissible if some weight is >= -1.
BoxLabel chain_to_label(const Chain& chain);

/// The label of the reversed chain: e' with e*e' = 1 (mod m).
BoxLabel dual_label(const BoxLabel& label);

struct Bezout {
  std::int64_t gcd;
  std::int64_t x;
  std::int64_t y;
};

/// gcd(a, b) = a*x + b*y with gcd >= 0.
Bezout extended_gcd(std::int64_t a, std::int64_t b);

/// Inverse of a modulo m (m >= 1); throws std::domain_error if not a unit.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

/// Representative of a modulo m in [0, m).
std::int64_t mod_floor(std::int64_t a, std::int64_t m);

/// Floor of num/den for den != 0.
std::int64_t floor_div(std::int64_t num, std::int64_t den);

}  // namespace giz
