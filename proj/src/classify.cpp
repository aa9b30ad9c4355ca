#include "gizatullin/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "gizatullin/errors.hpp"

namespace giz {

AffineMap AffineMap::inverse() const {
  if (a.is_zero()) throw std::domain_error("affine map with a = 0");
  return {Rational(1) / a, -b / a};
}

std::string AffineMap::str() const {
  std::string out;
  if (a == Rational(1)) {
    out = "t";
  } else if (a == Rational(-1)) {
    out = "-t";
  } else {
    out = a.str() + "*t";
  }
  if (b.sign() > 0) out += " + " + b.str();
  if (b.sign() < 0) out += " - " + (-b).str();
  return out;
}

namespace {

std::set<Point> fractional_support(const DpdPair& pair) {
  std::set<Point> pts;
  for (const auto& p : pair.d_plus().frac().support()) pts.insert(p);
  for (const auto& p : pair.d_minus().frac().support()) pts.insert(p);
  return pts;
}

}  // namespace

bool cond_alpha_plus(const DpdPair& pair) {
  const auto u = fractional_support(pair);
  if (u.empty()) return true;
  if (u.size() > 1) return false;
  const Point& p = *u.begin();
  const Rational sum = pair.sum()(p);
  if (sum.is_zero()) return true;
  const Integer& mp = pair.d_plus()(p).denominator();
  const Integer& mm = pair.d_minus()(p).denominator();
  const Integer m = std::min(mp, mm);
  return sum <= -Rational(Integer(1), m * m);
}

bool cond_alpha_plus_fiber(const DpdPair& pair) {
  const auto u = fractional_support(pair);
  if (u.empty()) return true;
  if (u.size() > 1) return false;
  const Point& p = *u.begin();
  if (pair.sum()(p).is_zero()) return true;
  const FiberChain fc = fiber_graph(pair, p);
  return fc.interior.at(*fc.o_plus) == -1 && fc.interior.at(*fc.o_minus) == -1;
}

bool cond_alpha_star(const DpdPair& pair) {
  const auto u = fractional_support(pair);
  if (u.empty()) return true;
  if (u.size() > 1) return false;
  const Point& p = *u.begin();
  if (pair.sum()(p) <= Rational(-1)) return true;
  return !pair.d_plus()(p).frac().is_zero() && !pair.d_minus()(p).frac().is_zero();
}

bool cond_beta(const DpdPair& pair) {
  const auto fp = pair.d_plus().frac().support();
  const auto fm = pair.d_minus().frac().support();
  if (fp.size() != 1 || fm.size() != 1 || fp.front() == fm.front()) return false;
  const QDivisor s = pair.sum();
  return s(fp.front()) <= Rational(-1) && s(fm.front()) <= Rational(-1);
}

bool psi_qualifies(const DpdPair& pair, const AffineMap& psi) {
  if (psi.a.is_zero()) return false;
  const AffineMap inv = psi.inverse();
  const QDivisor fplus = pair.d_plus().frac();
  const QDivisor fminus = pair.d_minus().frac();
  const QDivisor s = pair.sum();
  std::set<Point> frac_points;
  for (const auto& q : fminus.support()) frac_points.insert(q);
  for (const auto& q : fplus.support()) frac_points.insert(inv(q));
  for (const auto& q : frac_points) {
    if (fplus(psi(q)) != fminus(q)) return false;
  }
  std::set<Point> sum_points;
  for (const auto& q : s.support()) {
    sum_points.insert(q);
    sum_points.insert(inv(q));
  }
  for (const auto& q : sum_points) {
    if (s(psi(q)) != s(q)) return false;
  }
  return true;
}

std::optional<AffineMap> find_psi(const DpdPair& pair) {
  const auto fp = pair.d_plus().frac().support();
  const auto fm = pair.d_minus().frac().support();
  if (fp.size() > 1 || fm.size() > 1) return std::nullopt;
  if (fp.empty() && fm.empty()) return AffineMap{};
  if (fp.empty() != fm.empty()) return std::nullopt;
  const Point& p_plus = fp.front();
  const Point& p_minus = fm.front();
  if (pair.d_plus()(p_plus).frac() != pair.d_minus()(p_minus).frac()) return std::nullopt;
  if (p_plus == p_minus) return AffineMap{};  // the identity fixes the only constraint point

  // psi(p_-) = p_+ is forced; a second point x of supp S must go to a point
  // of supp S with the same coefficient, which pins psi down.
  const QDivisor s = pair.sum();
  std::optional<Point> x;
  for (const auto& q : s.support()) {
    if (q != p_minus) {
      x = q;
      break;
    }
  }
  if (!x) throw InternalError("sum divisor has no point besides p_-");
  for (const auto& y : s.support()) {
    if (y == p_plus || s(y) != s(*x)) continue;
    const Rational a = (y - p_plus) / (*x - p_minus);
    const AffineMap psi{a, p_plus - a * p_minus};
    if (psi_qualifies(pair, psi)) return psi;
  }
  return std::nullopt;
}

std::string to_string(CstarVerdict v) {
  switch (v) {
    case CstarVerdict::unique_up_to_conjugation_and_inversion:
      return "unique_up_to_conjugation_and_inversion";
    case CstarVerdict::non_unique_toric:
      return "non_unique_toric";
    case CstarVerdict::unknown:
      return "unknown";
  }
  return "unknown";
}

std::string to_string(FibrationCount c) {
  switch (c) {
    case FibrationCount::one:
      return "one";
    case FibrationCount::two:
      return "two";
    case FibrationCount::unknown:
      return "unknown";
  }
  return "unknown";
}

CstarResult cstar_uniqueness(const DpdPair& pair) {
  if (!is_gizatullin(pair)) throw NotGizatullin("a fractional part is supported at two or more points");
  CstarResult r;
  if (is_toric(pair)) {
    r.verdict = CstarVerdict::non_unique_toric;
  } else if (cond_alpha_star(pair) || cond_beta(pair)) {
    r.verdict = CstarVerdict::unique_up_to_conjugation_and_inversion;
    r.inverse_conjugate = find_psi(pair);
  }
  return r;
}

FibrationResult fibration_classes(const DpdPair& pair) {
  if (!is_gizatullin(pair)) throw NotGizatullin("a fractional part is supported at two or more points");
  FibrationResult r;
  if (is_toric(pair)) {
    const ToricType t = toric_type(pair);
    r.count = toric_classes(t.d, t.e) == 1 ? FibrationCount::one : FibrationCount::two;
  } else if (cond_alpha_plus(pair) || cond_beta(pair)) {
    r.psi = find_psi(pair);
    r.count = r.psi ? FibrationCount::one : FibrationCount::two;
  }
  return r;
}

ClassificationReport classify(const DpdPair& pair) {
  if (!is_gizatullin(pair)) throw NotGizatullin("a fractional part is supported at two or more points");
  ClassificationReport r;
  r.alpha_plus = cond_alpha_plus(pair);
  r.alpha_plus_fiber = cond_alpha_plus_fiber(pair);
  r.alpha_star = cond_alpha_star(pair);
  r.beta = cond_beta(pair);
  r.toric = is_toric(pair);
  r.cstar = cstar_uniqueness(pair);
  r.fibrations = fibration_classes(pair);
  return r;
}

ToricType toric_type(const DpdPair& pair) {
  if (!is_toric(pair)) throw InvalidPair("pair is not toric");
  std::set<Point> pts;
  for (const auto& p : pair.sum().support()) pts.insert(p);
  for (const auto& p : fractional_support(pair)) pts.insert(p);
  const PointData d = point_data(pair, *pts.begin());
  if (d.kind != PointData::Kind::cross) throw InternalError("toric point is not a cross point");
  return {d.delta, d.e};
}

namespace {

void check_toric(std::int64_t d, std::int64_t e) {
  if (d < 1 || e < 0 || e >= d || std::gcd(d, e) != 1) {
    throw BadToricType("toric type needs 0 <= e < d with gcd(e, d) = 1, got (" +
                       std::to_string(d) + "," + std::to_string(e) + ")");
  }
}

}  // namespace

Zigzag toric_zigzag(std::int64_t d, std::int64_t e) {
  check_toric(d, e);
  Zigzag z{0, 0};
  if (d == 1) return z;
  const Chain box = hj_chain(BoxLabel(d - e, d));
  z.insert(z.end(), box.begin(), box.end());
  return z;
}

int toric_classes(std::int64_t d, std::int64_t e) {
  check_toric(d, e);
  return mod_floor(e * e, d) == mod_floor(1, d) ? 1 : 2;
}

bool toric_iso(std::int64_t d, std::int64_t e, std::int64_t d2, std::int64_t e2) {
  check_toric(d, e);
  check_toric(d2, e2);
  if (d != d2) return false;
  return e == e2 || mod_floor(e * e2, d) == mod_floor(1, d);
}

DanilovGizatullin danilov_gizatullin(std::int64_t k, std::int64_t r) {
  if (r < 1 || r > k) throw BadParameters("need 1 <= r <= k");
  DpdPair pair(QDivisor({{Point(0), Rational(Integer(-1), Integer(r))}}),
               QDivisor({{Point(1), Rational(Integer(-1), Integer(k + 1 - r))}}));
  ExtendedDivisor ext = extended_divisor(pair);
  return {std::move(pair), std::move(ext)};
}

bool smooth_exceptional_zigzag(const Zigzag& z) {
  if (!is_standard(z)) throw NotStandard("zigzag is not in standard form");
  if (z.size() < 5) return false;
  const auto odd = std::count_if(z.begin() + 2, z.end(), [](Weight w) { return w != -2; });
  return odd <= 1;
}

DpdPair surface_xy_p(const std::vector<std::pair<Point, std::int64_t>>& roots) {
  if (roots.empty()) throw EmptyPolynomial("polynomial needs at least one root");
  std::map<Point, std::int64_t> merged;
  for (const auto& [p, m] : roots) {
    if (m < 1) throw BadParameters("root multiplicities must be positive");
    merged[p] += m;
  }
  std::vector<std::pair<Point, Rational>> terms;
  for (const auto& [p, m] : merged) terms.emplace_back(p, Rational(-m));
  return DpdPair(QDivisor{}, QDivisor(terms));
}

}  // namespace giz
