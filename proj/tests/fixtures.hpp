#pragma once

// Hand-built graphs and pairs from the worked examples.

#include <cstdint>
#include <utility>
#include <vector>

#include "gizatullin/dpd.hpp"
#include "gizatullin/dualgraph.hpp"
#include "gizatullin/exactmath.hpp"

namespace fixture {

using giz::AttachedFeather;
using giz::Chain;
using giz::FiberGraph;
using giz::Rational;

inline Rational q(const char* s) { return Rational::parse(s); }
inline Rational frac(std::int64_t num, std::int64_t den) {
  return Rational(giz::Integer(num), giz::Integer(den));
}

inline giz::DpdPair pair(std::vector<std::pair<Rational, Rational>> plus,
                         std::vector<std::pair<Rational, Rational>> minus) {
  return giz::DpdPair(giz::QDivisor(plus), giz::QDivisor(minus));
}

// D_0(-n) - D_1(-2, B_1(-1)) - D_2 - ... - D_n, all -2
inline FiberGraph rigid_chain(int n) {
  Chain spine{-n, -2};
  for (int k = 0; k < n - 1; ++k) spine.push_back(-2);
  return FiberGraph(spine, {{1, {-1, {}}, "B_1"}});
}

// D_0(-n) - D_1(-2, B_1(-1)) - ... - D_{n-1}(-2, B_2(-2))
inline FiberGraph generalizable_chain(int n) {
  Chain spine{-n, -2};
  for (int k = 0; k < n - 2; ++k) spine.push_back(-2);
  const std::size_t last = spine.size() - 1;
  return FiberGraph(spine, {{1, {-1, {}}, "B_1"}, {last, {-2, {}}, "B_2"}});
}

// The generalization of the previous graph: B_2 moved to D_0 as a (-1)-curve.
inline FiberGraph generalized_chain(int n) {
  Chain spine{-n, -2};
  for (int k = 0; k < n - 2; ++k) spine.push_back(-2);
  return FiberGraph(spine, {{1, {-1, {}}, "B_1"}, {0, {-1, {}}, "B_2"}});
}

// [[0,0,-4,-2,-2]] with F_1, F_2 (-1) at C_2 and B_2(-1) at C_3
inline FiberGraph two_feather_fiber() {
  return FiberGraph({-4, -2, -2},
                    {{0, {-1, {}}, "F_1"}, {0, {-1, {}}, "F_2"}, {1, {-1, {}}, "B_2"}});
}

inline giz::DpdPair rigid_chain_pair(int n) {
  return pair({{Rational(0), frac(1, n)}, {Rational(1), Rational(-1)}}, {{Rational(0), frac(-1, n)}});
}

inline giz::DpdPair generalizable_pair(int n) {
  return pair({{Rational(0), frac(1, n)}, {Rational(1), Rational(-1)}},
              {{Rational(0), frac(-1, n - 1)}});
}

}  // namespace fixture
