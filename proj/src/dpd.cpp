#include "gizatullin/dpd.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <sstream>

#include "gizatullin/errors.hpp"

namespace giz {

QDivisor::QDivisor(const std::vector<std::pair<Point, Rational>>& terms) {
  std::set<Point> seen;
  for (const auto& [p, c] : terms) {
    if (!seen.insert(p).second) throw InvalidPair("point " + p.str() + " listed twice");
    set(p, c);
  }
}

void QDivisor::set(const Point& p, const Rational& value) {
  if (value.is_zero()) {
    terms_.erase(p);
  } else {
    terms_[p] = value;
  }
}

Rational QDivisor::operator()(const Point& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational{} : it->second;
}

std::vector<Point> QDivisor::support() const {
  std::vector<Point> out;
  for (const auto& [p, c] : terms_) out.push_back(p);
  return out;
}

QDivisor QDivisor::frac() const {
  QDivisor out;
  for (const auto& [p, c] : terms_) out.set(p, c.frac());
  return out;
}

QDivisor QDivisor::floor() const {
  QDivisor out;
  for (const auto& [p, c] : terms_) out.set(p, Rational(c.floor()));
  return out;
}

Rational QDivisor::degree() const {
  Rational sum;
  for (const auto& [p, c] : terms_) sum += c;
  return sum;
}

QDivisor QDivisor::operator+(const QDivisor& other) const {
  QDivisor out = *this;
  for (const auto& [p, c] : other.terms_) out.set(p, out(p) + c);
  return out;
}

QDivisor QDivisor::operator-() const {
  QDivisor out;
  for (const auto& [p, c] : terms_) out.set(p, -c);
  return out;
}

QDivisor QDivisor::operator-(const QDivisor& other) const { return *this + (-other); }

std::string QDivisor::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (first) {
      os << c << "[" << p << "]";
    } else if (c.sign() < 0) {
      os << " - " << -c << "[" << p << "]";
    } else {
      os << " + " << c << "[" << p << "]";
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

DpdPair::DpdPair(QDivisor d_plus, QDivisor d_minus)
    : plus_(std::move(d_plus)), minus_(std::move(d_minus)) {
  const QDivisor s = sum();
  for (const auto& [p, c] : s.terms()) {
    if (c.sign() > 0) {
      throw InvalidPair("D_+ + D_- is positive at " + p.str() + " (value " + c.str() + ")");
    }
  }
  // D_+ + D_- = 0 describes A^1 x C^*, which is not a Gizatullin surface
  if (s.is_zero()) throw InvalidPair("D_+ + D_- vanishes identically");
}

std::vector<Point> DpdPair::points() const {
  std::set<Point> pts;
  for (const auto& p : plus_.support()) pts.insert(p);
  for (const auto& p : minus_.support()) pts.insert(p);
  return {pts.begin(), pts.end()};
}

DpdPair canonicalize(const DpdPair& pair) {
  const QDivisor shift = pair.d_plus().floor();
  return DpdPair(pair.d_plus() - shift, pair.d_minus() + shift);
}

std::optional<GizatullinPoints> gizatullin_points(const DpdPair& pair) {
  const auto fp = pair.d_plus().frac().support();
  const auto fm = pair.d_minus().frac().support();
  if (fp.size() > 1 || fm.size() > 1) return std::nullopt;
  GizatullinPoints g;
  if (!fp.empty()) g.p_plus = fp.front();
  if (!fm.empty()) g.p_minus = fm.front();
  return g;
}

bool is_gizatullin(const DpdPair& pair) { return gizatullin_points(pair).has_value(); }

namespace {

// The single point carrying all fractional parts and all nonzero sums.
std::optional<Point> toric_point(const DpdPair& pair) {
  std::set<Point> pts;
  for (const auto& p : pair.d_plus().frac().support()) pts.insert(p);
  for (const auto& p : pair.d_minus().frac().support()) pts.insert(p);
  for (const auto& p : pair.sum().support()) pts.insert(p);
  if (pts.size() != 1) return std::nullopt;
  return *pts.begin();
}

}  // namespace

bool is_toric(const DpdPair& pair) { return toric_point(pair).has_value(); }

PointData point_data(const DpdPair& pair, const Point& p) {
  PointData d;
  d.p = p;
  const Rational plus = pair.d_plus()(p);
  const Rational minus = pair.d_minus()(p);
  d.m_plus = to_int64(plus.denominator());
  d.e_plus = to_int64(-plus.numerator());
  d.m_minus = -to_int64(minus.denominator());
  d.e_minus = to_int64(-minus.numerator());
  const Rational sum = plus + minus;
  if (sum.is_zero()) {
    d.kind = plus.is_integer() ? PointData::Kind::plain : PointData::Kind::multiple_fiber;
    return d;
  }
  d.kind = PointData::Kind::cross;
  const Rational delta = Rational(d.m_plus) * Rational(d.m_minus) * sum;
  if (!delta.is_integer() || delta.sign() <= 0) {
    throw InternalError("singularity order is not a positive integer at " + p.str());
  }
  d.delta = to_int64(delta.numerator());
  // a m+ - b e+ = 1, then e = a m- - b e- (mod delta)
  const Bezout bz = extended_gcd(d.m_plus, d.e_plus);
  const std::int64_t a = bz.x;
  const std::int64_t b = -bz.y;
  const Integer raw = Integer(a) * d.m_minus - Integer(b) * d.e_minus;
  d.e = to_int64(((raw % d.delta) + d.delta) % d.delta);
  return d;
}

std::vector<SingularPoint> singular_points(const DpdPair& pair) {
  std::vector<SingularPoint> out;
  for (const auto& p : pair.points()) {
    const PointData d = point_data(pair, p);
    if (d.kind == PointData::Kind::cross && d.delta >= 2) out.push_back({p, d.delta, d.e});
  }
  return out;
}

bool is_smooth(const DpdPair& pair) { return singular_points(pair).empty(); }

namespace {

// Local toric picture over a point: the fiber is the chain of rays strictly
// between (0,-1) (the section C+) and (0,1) (the section C-) in a smooth
// subdivision of the right half plane. O+ and O- are the rays (m+, -e+) and
// (-m-, e-).
struct Ray {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const Ray&, const Ray&) = default;
};

std::int64_t cross(const Ray& a, const Ray& b) {
  return to_int64(Integer(a.x) * b.y - Integer(a.y) * b.x);
}

// Minimal resolution of the cone from u to w (counterclockwise): the rays
// strictly between them.
std::vector<Ray> resolve_cone(const Ray& u, const Ray& w) {
  std::vector<Ray> out;
  Ray r = u;
  while (cross(r, w) > 1) {
    const Bezout bz = extended_gcd(r.x, r.y);
    Ray v{-bz.y, bz.x};  // cross(r, v) = 1
    // push v towards w as far as the cone allows
    const std::int64_t t = -floor_div(cross(v, w), cross(r, w));
    v = {v.x + t * r.x, v.y + t * r.y};
    out.push_back(v);
    r = v;
  }
  return out;
}

}  // namespace

FiberChain fiber_graph(const DpdPair& pair, const Point& p) {
  const PointData d = point_data(pair, p);
  FiberChain fc;
  if (d.kind == PointData::Kind::plain) {
    fc.interior = {0};
    return fc;
  }
  const Ray lo{0, -1}, hi{0, 1};
  const Ray o_plus{d.m_plus, -d.e_plus};
  const Ray o_minus{-d.m_minus, d.e_minus};
  std::vector<Ray> rays{lo};
  auto append = [&rays](const std::vector<Ray>& more) { rays.insert(rays.end(), more.begin(), more.end()); };
  append(resolve_cone(lo, o_plus));
  fc.o_plus = rays.size() - 1;
  rays.push_back(o_plus);
  if (o_minus == o_plus) {
    fc.o_minus = fc.o_plus;
  } else {
    append(resolve_cone(o_plus, o_minus));
    fc.o_minus = rays.size() - 1;
    rays.push_back(o_minus);
  }
  append(resolve_cone(o_minus, hi));
  rays.push_back(hi);
  // r_{i-1} + r_{i+1} = -w_i r_i
  for (std::size_t i = 1; i + 1 < rays.size(); ++i) {
    const Ray& r = rays[i];
    const std::int64_t sx = rays[i - 1].x + rays[i + 1].x;
    const std::int64_t sy = rays[i - 1].y + rays[i + 1].y;
    fc.interior.push_back(-(r.x != 0 ? sx / r.x : sy / r.y));
  }
  return fc;
}

Weight parabolic_weight(const DpdPair& pair) {
  const Rational w = pair.d_plus().floor().degree() + pair.d_minus().floor().degree();
  return to_int64(w.numerator());
}

namespace {

GizatullinPoints require_gizatullin(const DpdPair& pair) {
  auto g = gizatullin_points(pair);
  if (!g) throw NotGizatullin("a fractional part is supported at two or more points");
  return *g;
}

struct Spine {
  Chain weights;
  std::size_t s = 2;
};

Spine build_spine(const DpdPair& pair, const GizatullinPoints& g) {
  Spine sp;
  if (g.p_plus) {
    sp.weights = hj_chain(dual_label(BoxLabel::from_fraction(pair.d_plus()(*g.p_plus))));
  }
  sp.s = 2 + sp.weights.size();
  sp.weights.push_back(parabolic_weight(pair));
  if (g.p_minus) {
    const Chain tail = hj_chain(BoxLabel::from_fraction(pair.d_minus()(*g.p_minus)));
    sp.weights.insert(sp.weights.end(), tail.begin(), tail.end());
  }
  return sp;
}

// The bridge is O-; the box is the part of the fiber between O- and O+, read
// from the O- side.
Feather feather_at(const DpdPair& pair, const Point& q) {
  const FiberChain fc = fiber_graph(pair, q);
  Feather f;
  f.bridge = fc.interior.at(*fc.o_minus);
  f.box.assign(fc.interior.begin() + static_cast<std::ptrdiff_t>(*fc.o_plus) + 1,
               fc.interior.begin() + static_cast<std::ptrdiff_t>(*fc.o_minus));
  std::reverse(f.box.begin(), f.box.end());
  return f;
}

ExtendedDivisor build_extended(const DpdPair& pair, bool guarded) {
  const GizatullinPoints g = require_gizatullin(pair);
  if (guarded && is_toric(pair)) {
    throw ToricInput("toric surface: use the toric zigzag instead");
  }
  const Spine sp = build_spine(pair, g);
  if (guarded && sp.weights[sp.s - 2] > -2) {
    throw InternalError("parabolic component has weight " + std::to_string(sp.weights[sp.s - 2]) +
                        " for a non-toric pair");
  }
  const std::optional<Point> tail = tail_point(pair);
  const QDivisor sum = pair.sum();
  std::vector<AttachedFeather> feathers;
  for (const auto& [q, c] : sum.terms()) {
    if (c.sign() >= 0 || (tail && q == *tail)) continue;
    feathers.push_back({sp.s - 2, feather_at(pair, q), "F_" + std::to_string(feathers.size() + 1)});
  }
  std::optional<std::size_t> tail_index;
  if (tail) {
    tail_index = feathers.size();
    feathers.push_back({sp.weights.size() - 1, feather_at(pair, *tail), "F_0"});
  }
  try {
    return ExtendedDivisor(FiberGraph(sp.weights, std::move(feathers)), sp.s, tail_index);
  } catch (const InvalidFiber& ex) {
    throw InternalError(std::string("constructed divisor is not a fiber: ") + ex.what());
  }
}

}  // namespace

std::optional<Point> tail_point(const DpdPair& pair) {
  const GizatullinPoints g = require_gizatullin(pair);
  const QDivisor sum = pair.sum();
  if (g.p_minus) {
    if (sum(*g.p_minus).sign() < 0) return g.p_minus;
    return std::nullopt;
  }
  // D_- integral: its tail box is empty and C_n = C_s, so any point with
  // negative sum may serve; prefer one away from p_+.
  for (const auto& [q, c] : sum.terms()) {
    if (c.sign() < 0 && (!g.p_plus || q != *g.p_plus)) return q;
  }
  if (g.p_plus && sum(*g.p_plus).sign() < 0) return g.p_plus;
  return std::nullopt;
}

Zigzag boundary_zigzag(const DpdPair& pair) {
  const GizatullinPoints g = require_gizatullin(pair);
  if (is_toric(pair)) throw ToricInput("toric surface: use the toric zigzag instead");
  const Spine sp = build_spine(pair, g);
  if (sp.weights[sp.s - 2] > -2) {
    throw InternalError("parabolic component has weight " + std::to_string(sp.weights[sp.s - 2]) +
                        " for a non-toric pair");
  }
  Zigzag z{0, 0};
  z.insert(z.end(), sp.weights.begin(), sp.weights.end());
  return z;
}

ExtendedDivisor extended_divisor(const DpdPair& pair) { return build_extended(pair, true); }

ExtendedDivisor extended_divisor_vee(const DpdPair& pair) {
  return build_extended(pair.swapped(), true);
}

ExtendedDivisor extended_divisor_unguarded(const DpdPair& pair) {
  return build_extended(pair, false);
}

}  // namespace giz
