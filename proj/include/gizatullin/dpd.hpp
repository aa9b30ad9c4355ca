#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gizatullin/dualgraph.hpp"
#include "gizatullin/exactmath.hpp"

namespace giz {

using Point = Rational;

/// Finitely supported Q-divisor on the affine line; zero coefficients are
/// never stored.
class QDivisor {
 public:
  QDivisor() = default;
  /// Throws InvalidPair on repeated points; zero coefficients are dropped.
  explicit QDivisor(const std::vector<std::pair<Point, Rational>>& terms);

  Rational operator()(const Point& p) const;
  const std::map<Point, Rational>& terms() const { return terms_; }
  std::vector<Point> support() const;
  bool is_zero() const { return terms_.empty(); }

  /// {D}: fractional parts, pointwise.
  QDivisor frac() const;
  /// Floor, pointwise.
  QDivisor floor() const;
  Rational degree() const;

  QDivisor operator+(const QDivisor& other) const;
  QDivisor operator-(const QDivisor& other) const;
  QDivisor operator-() const;
  friend bool operator==(const QDivisor&, const QDivisor&) = default;

  std::string str() const;

 private:
  void set(const Point& p, const Rational& value);
  std::map<Point, Rational> terms_;
};

/// A DPD presentation (D_+, D_-) with D_+ + D_- <= 0 and D_+ + D_- not
/// identically zero.
class DpdPair {
 public:
  /// Throws InvalidPair when the conditions fail.
  DpdPair(QDivisor d_plus, QDivisor d_minus);

  const QDivisor& d_plus() const { return plus_; }
  const QDivisor& d_minus() const { return minus_; }
  QDivisor sum() const { return plus_ + minus_; }
  DpdPair swapped() const { return DpdPair(minus_, plus_); }

  /// Sorted union of both supports.
  std::vector<Point> points() const;

  friend bool operator==(const DpdPair&, const DpdPair&) = default;

 private:
  QDivisor plus_;
  QDivisor minus_;
};

/// (D_+ + E, D_- - E) with E = -floor(D_+), so D_+ becomes purely fractional.
DpdPair canonicalize(const DpdPair& pair);

struct GizatullinPoints {
  std::optional<Point> p_plus;   // support of {D_+}
  std::optional<Point> p_minus;  // support of {D_-}
};

/// Present when both fractional supports have at most one point.
std::optional<GizatullinPoints> gizatullin_points(const DpdPair& pair);
bool is_gizatullin(const DpdPair& pair);

bool is_toric(const DpdPair& pair);

struct PointData {
  enum class Kind { cross, multiple_fiber, plain };
  Point p;
  std::int64_t m_plus = 1;   // > 0, D_+(p) = -e_plus / m_plus
  std::int64_t e_plus = 0;
  std::int64_t m_minus = -1;  // < 0, D_-(p) = e_minus / m_minus
  std::int64_t e_minus = 0;
  std::int64_t delta = 0;  // m_plus * m_minus * (D_+ + D_-)(p), 0 unless cross
  std::int64_t e = 0;      // in [0, delta) for cross points
  Kind kind = Kind::plain;
};

PointData point_data(const DpdPair& pair, const Point& p);

struct SingularPoint {
  Point p;
  std::int64_t delta;
  std::int64_t e;
};

/// Cross points with delta >= 2.
std::vector<SingularPoint> singular_points(const DpdPair& pair);
bool is_smooth(const DpdPair& pair);

/// The fiber over p between the two section curves: interior weights and the
/// positions of O+ and O- (equal for a multiple fiber, absent for a plain one).
struct FiberChain {
  Chain interior;
  std::optional<std::size_t> o_plus;
  std::optional<std::size_t> o_minus;
};

FiberChain fiber_graph(const DpdPair& pair, const Point& p);

/// deg floor(D_+) + deg floor(D_-).
Weight parabolic_weight(const DpdPair& pair);

/// Throws NotGizatullin or ToricInput.
Zigzag boundary_zigzag(const DpdPair& pair);

/// Throws NotGizatullin or ToricInput.
ExtendedDivisor extended_divisor(const DpdPair& pair);
ExtendedDivisor extended_divisor_vee(const DpdPair& pair);

/// Construction without the toric guard; used to cross-check is_toric.
ExtendedDivisor extended_divisor_unguarded(const DpdPair& pair);

/// The point whose tail feather sits at the last spine component, if any.
std::optional<Point> tail_point(const DpdPair& pair);

}  // namespace giz
