#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gizatullin/dpd.hpp"
#include "gizatullin/dualgraph.hpp"

namespace giz {

/// psi(t) = a t + b with a != 0.
struct AffineMap {
  Rational a{1};
  Rational b{0};

  Point operator()(const Point& t) const { return a * t + b; }
  AffineMap inverse() const;
  std::string str() const;
  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

bool cond_alpha_plus(const DpdPair& pair);
bool cond_alpha_star(const DpdPair& pair);
bool cond_beta(const DpdPair& pair);

/// (α+) with the inequality replaced by what it is meant to detect: at the
/// one fractional point the sum vanishes or both O+ and O- are (-1)-curves in
/// the resolved fiber. Differs from cond_alpha_plus only when both fractional
/// parts at that point are nonzero.
bool cond_alpha_plus_fiber(const DpdPair& pair);

/// Whether {D_+}(psi(q)) = {D_-}(q) and S(psi(q)) = S(q) for all q, with
/// S = D_+ + D_-.
bool psi_qualifies(const DpdPair& pair, const AffineMap& psi);

/// Some affine map satisfying psi_qualifies, searched exhaustively in sorted
/// point order; absent when none exists.
std::optional<AffineMap> find_psi(const DpdPair& pair);

enum class CstarVerdict { unique_up_to_conjugation_and_inversion, non_unique_toric, unknown };
enum class FibrationCount { one, two, unknown };

std::string to_string(CstarVerdict v);
std::string to_string(FibrationCount c);

struct CstarResult {
  CstarVerdict verdict = CstarVerdict::unknown;
  std::optional<AffineMap> inverse_conjugate;
};

struct FibrationResult {
  FibrationCount count = FibrationCount::unknown;
  std::optional<AffineMap> psi;
};

CstarResult cstar_uniqueness(const DpdPair& pair);
FibrationResult fibration_classes(const DpdPair& pair);

struct ClassificationReport {
  bool alpha_plus = false;
  bool alpha_plus_fiber = false;
  bool alpha_star = false;
  bool beta = false;
  bool toric = false;
  CstarResult cstar;
  FibrationResult fibrations;
};

/// Throws NotGizatullin for pairs outside the Gizatullin class.
ClassificationReport classify(const DpdPair& pair);

struct ToricType {
  std::int64_t d = 1;
  std::int64_t e = 0;
  friend bool operator==(const ToricType&, const ToricType&) = default;
};

/// (d, e) of a toric pair, read from the singularity data at its one point.
/// Throws InvalidPair if the pair is not toric.
ToricType toric_type(const DpdPair& pair);

/// All three throw BadToricType unless 0 <= e < d and gcd(e, d) = 1.
Zigzag toric_zigzag(std::int64_t d, std::int64_t e);
int toric_classes(std::int64_t d, std::int64_t e);
bool toric_iso(std::int64_t d, std::int64_t e, std::int64_t d2, std::int64_t e2);

struct DanilovGizatullin {
  DpdPair pair;
  ExtendedDivisor ext;
};

/// The pair (-1/r [0], -1/(k+1-r) [1]); throws BadParameters unless
/// 1 <= r <= k.
DanilovGizatullin danilov_gizatullin(std::int64_t k, std::int64_t r);

/// [[0,0,(-2)_{s-2},w_s,(-2)_{n-s}]] with n >= 4. Throws NotStandard.
bool smooth_exceptional_zigzag(const Zigzag& z);

/// (0, -div P) for P with the given roots and multiplicities; repeated roots
/// are merged. Throws EmptyPolynomial or BadParameters.
DpdPair surface_xy_p(const std::vector<std::pair<Point, std::int64_t>>& roots);

}  // namespace giz
