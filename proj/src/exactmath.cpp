#include "gizatullin/exactmath.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "gizatullin/errors.hpp"

namespace giz {

std::int64_t to_int64(const Integer& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("integer does not fit into 64 bits: " + value.str());
  }
  return value.convert_to<std::int64_t>();
}

Rational::Rational(long long value) : num_(value) {}

Rational::Rational(Integer value) : num_(std::move(value)) {}

Rational::Rational(Integer numerator, Integer denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ == 0) throw std::domain_error("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  Integer g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) throw ParseError("malformed rational: '" + std::string(whole) + "'");
  Integer value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("malformed rational: '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  Integer num = parse_integer(text.substr(0, slash), text);
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  }
  Integer den = parse_integer(den_text, text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(std::move(num), std::move(den));
}

Integer Rational::floor() const {
  Integer q = num_ / den_;  // truncates toward zero
  if (num_ < 0 && q * den_ != num_) q -= 1;
  return q;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& other) {
  num_ = num_ * other.den_ + other.num_ * den_;
  den_ *= other.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& other) { return *this += -other; }

Rational& Rational::operator*=(const Rational& other) {
  num_ *= other.num_;
  den_ *= other.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.num_ == 0) throw std::domain_error("division by zero rational");
  num_ *= other.den_;
  den_ *= other.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const Integer lhs = a.num_ * b.den_;
  const Integer rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

// ---------------------------------------------------------------------------

BoxLabel::BoxLabel(std::int64_t e, std::int64_t m) : e_(e), m_(m) {
  if (m < 1 || e < 0 || e >= m) {
    throw std::invalid_argument("box label needs 0 <= e < m");
  }
  if (e == 0 && m != 1) throw std::invalid_argument("the empty box is (0,1)");
  if (e > 0 && std::gcd(e, m) != 1) throw std::invalid_argument("box label needs gcd(e, m) = 1");
}

BoxLabel BoxLabel::from_fraction(const Rational& value) {
  const Rational f = value.frac();
  if (f.is_zero()) return {};
  return BoxLabel(to_int64(f.numerator()), to_int64(f.denominator()));
}

std::ostream& operator<<(std::ostream& os, const BoxLabel& label) {
  return os << label.e() << "/" << label.m();
}

Chain hj_chain(const BoxLabel& label) {
  Chain chain;
  // m/e = k - 1/(e/(k e - m)) with k = ceil(m/e)
  std::int64_t a = label.m();
  std::int64_t b = label.e();
  while (b != 0) {
    const std::int64_t k = (a + b - 1) / b;
    chain.push_back(-k);
    const std::int64_t next = k * b - a;
    a = b;
    b = next;
  }
  return chain;
}

BoxLabel chain_to_label(const Chain& chain) {
  for (Weight w : chain) {
    if (w > -2) throw ChainNotAdmissible("chain weight " + std::to_string(w) + " is not <= -2");
  }
  // Evaluate from the tail; p/q is the value of the suffix, starting at 1/0.
  Integer p = 1;
  Integer q = 0;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    Integer next_p = Integer(-*it) * p - q;
    q = p;
    p = std::move(next_p);
  }
  return BoxLabel(to_int64(q), to_int64(p));
}

BoxLabel dual_label(const BoxLabel& label) {
  if (label.empty()) return label;
  return BoxLabel(mod_inverse(label.e(), label.m()), label.m());
}

Bezout extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m < 1) throw std::domain_error("modulus must be positive");
  if (m == 1) return 0;
  const Bezout bz = extended_gcd(mod_floor(a, m), m);
  if (bz.gcd != 1) throw std::domain_error("not invertible modulo " + std::to_string(m));
  return mod_floor(bz.x, m);
}

std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("floor_div by zero");
  std::int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

}  // namespace giz
