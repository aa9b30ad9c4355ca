// Acceptance run: one PASS/FAIL line per criterion, with the sub-checks
// indented below it. All comparisons are exact; there are no tolerances.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "gizatullin/classify.hpp"
#include "gizatullin/dpd.hpp"
#include "gizatullin/dualgraph.hpp"
#include "gizatullin/errors.hpp"
#include "gizatullin/exactmath.hpp"
#include "gizatullin/rigidity.hpp"
#include "oracles.hpp"

using namespace giz;

namespace {

struct Check {
  std::string what;
  bool ok;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  void add(std::string what, bool ok, std::string detail = {}) {
    checks.push_back({std::move(what), ok, std::move(detail)});
  }
  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
  }
};

bool same_structure(const FiberGraph& a, const FiberGraph& b) {
  if (a.spine() != b.spine() || a.feathers().size() != b.feathers().size()) return false;
  for (std::size_t j = 0; j < a.feathers().size(); ++j) {
    if (a.feathers()[j].index != b.feathers()[j].index) return false;
    if (!(a.feathers()[j].feather == b.feathers()[j].feather)) return false;
  }
  return true;
}

std::vector<DpdPair> corpus_pairs(std::size_t count) {
  std::vector<DpdPair> out;
  for (unsigned seed = 1; out.size() < count; ++seed) {
    oracle::PairGenerator gen(1000 + seed);
    for (int it = 0; it < 2000 && out.size() < count; ++it) {
      auto p = gen.next();
      if (!p || is_toric(*p)) continue;
      out.push_back(*p);
    }
  }
  return out;
}

Criterion ac1() {
  Criterion c{"AC1", "Danilov-Gizatullin zigzags and feathers, 1 <= r <= k <= 10", {}, {}};
  std::size_t bad_zigzag = 0, bad_feathers = 0, cases = 0;
  std::string first;
  for (int k = 1; k <= 10; ++k) {
    for (int r = 1; r <= k; ++r) {
      ++cases;
      const auto dg = danilov_gizatullin(k, r);
      Zigzag z{0, 0};
      for (int i = 0; i < k; ++i) z.push_back(-2);
      if (boundary_zigzag(dg.pair) != z || dg.ext.zigzag() != z) ++bad_zigzag;
      const auto& f = dg.ext.fiber();
      const auto coll = dg.ext.collection();
      const auto tail = dg.ext.tail();
      // fiber index i is C_{i+2}
      bool ok = coll.size() == 1 && tail.has_value() && f.feathers().size() == 2;
      if (ok) {
        const auto& f1 = f.feathers()[coll[0]];
        const auto& f0 = f.feathers()[*tail];
        ok = f1.index == static_cast<std::size_t>(r - 1) && f1.feather == Feather{-r, {}} &&
             f0.index == static_cast<std::size_t>(k - 1) && f0.feather == Feather{-1, {}};
      }
      if (!ok) {
        ++bad_feathers;
        if (first.empty()) first = "(k,r)=(" + std::to_string(k) + "," + std::to_string(r) + ") " + render_ascii(dg.ext);
      }
    }
  }
  c.add("boundary zigzag [[0,0,(-2)_k]] on " + std::to_string(cases) + " pairs", bad_zigzag == 0,
        std::to_string(bad_zigzag) + " mismatches");
  c.add("F_1 = (-r) at C_{r+1}, F_0 = (-1) at C_{k+1}", bad_feathers == 0, first);
  return c;
}

Criterion ac2() {
  Criterion c{"AC2", "rigid chain example, n = 2..12", {}, {}};
  std::size_t bad_graph = 0, bad_rigid = 0;
  for (int n = 2; n <= 12; ++n) {
    const auto ext = extended_divisor(fixture::rigid_chain_pair(n));
    if (!same_structure(ext.fiber(), fixture::rigid_chain(n))) ++bad_graph;
    const auto r = is_rigid(ext.fiber());
    if (!r.rigid || !jump_pairs(ext.fiber()).empty() || !generalization_moves(ext.fiber()).empty()) ++bad_rigid;
  }
  c.add("constructed fiber equals [-n, -2{B_1(-1)}, (-2)_{n-1}]", bad_graph == 0,
        std::to_string(bad_graph) + " mismatches");
  c.add("rigid, no jumps, no generalizations", bad_rigid == 0, std::to_string(bad_rigid) + " failures");
  return c;
}

Criterion ac3() {
  Criterion c{"AC3", "generalizable chain example, n = 3..12", {}, {}};
  std::size_t bad_graph = 0, bad_mother = 0, bad_jumps = 0, bad_move = 0;
  for (int n = 3; n <= 12; ++n) {
    const auto ext = extended_divisor(fixture::generalizable_pair(n));
    const auto& f = ext.fiber();
    if (!same_structure(f, fixture::generalizable_chain(n))) {
      ++bad_graph;
      continue;
    }
    if (mother_component(f, f.bridge_id(1)) != 0) ++bad_mother;
    if (!jump_pairs(f).empty()) ++bad_jumps;
    const auto moves = generalization_moves(f);
    if (moves.size() != 1 || !same_structure(moves[0].result, fixture::generalized_chain(n))) ++bad_move;
  }
  c.add("constructed fiber matches", bad_graph == 0, std::to_string(bad_graph) + " mismatches");
  c.add("mother component of B_2 is D_0", bad_mother == 0, std::to_string(bad_mother) + " failures");
  c.add("no jumps", bad_jumps == 0, std::to_string(bad_jumps) + " failures");
  c.add("one generalization, to B_2(-1) at D_0 with B_1(-1) at D_1", bad_move == 0,
        std::to_string(bad_move) + " failures");
  return c;
}

Criterion ac4() {
  Criterion c{"AC4", "toric suite, d <= 30", {}, {}};
  std::size_t bad_z = 0, bad_classes = 0, bad_iso = 0, types = 0;
  for (std::int64_t d = 1; d <= 30; ++d) {
    for (std::int64_t e = 0; e < d; ++e) {
      if (std::gcd(d, e) != 1) continue;
      ++types;
      Zigzag want{0, 0};
      if (d > 1) {
        const Chain box = hj_chain(BoxLabel(d - e, d));
        want.insert(want.end(), box.begin(), box.end());
        // independent check of the box: its continued fraction is d/(d-e)
        if (oracle::evaluate_chain(box) != Rational(Integer(d), Integer(d - e))) ++bad_z;
      }
      if (toric_zigzag(d, e) != want) ++bad_z;
      const bool self_inverse = (e * e) % d == 1 % d;
      if ((toric_classes(d, e) == 1) != self_inverse) ++bad_classes;
      for (std::int64_t e2 = 0; e2 < d; ++e2) {
        if (std::gcd(d, e2) != 1) continue;
        const bool rule = e == e2 || (e * e2) % d == 1 % d;
        if (toric_iso(d, e, d, e2) != rule || toric_iso(d, e, d, e2) != toric_iso(d, e2, d, e)) ++bad_iso;
      }
      if (!toric_iso(d, e, d, e)) ++bad_iso;
      if (toric_iso(d, e, d + 1, 1)) ++bad_iso;
    }
  }
  c.add("toric_zigzag = [[0,0]] + hj_chain(d-e, d) on " + std::to_string(types) + " types", bad_z == 0,
        std::to_string(bad_z) + " mismatches");
  c.add("one class exactly when e^2 = 1 mod d", bad_classes == 0, std::to_string(bad_classes) + " mismatches");
  c.add("toric_iso reflexive, symmetric, e*e' = 1 rule", bad_iso == 0, std::to_string(bad_iso) + " mismatches");
  const auto plane = fixture::pair({{Rational(0), fixture::frac(-1, 2)}}, {{Rational(0), fixture::frac(1, 3)}});
  const bool toric = is_toric(plane);
  const ToricType t = toric ? toric_type(plane) : ToricType{0, 0};
  c.add("(-1/2[0], 1/3[0]) is toric of type (1,0) with zigzag [[0,0]]",
        toric && t == ToricType{1, 0} && toric_zigzag(t.d, t.e) == Zigzag{0, 0},
        "type (" + std::to_string(t.d) + "," + std::to_string(t.e) + ")");
  return c;
}

Criterion ac5(const std::vector<DpdPair>& pairs) {
  Criterion c{"AC5", "rigidity under (alpha+), (alpha*), (beta) on generated pairs", {}, {}};
  std::size_t n_ap = 0, n_apf = 0, n_as = 0, n_b = 0, n_neither = 0;
  std::size_t bad_ap = 0, bad_apf = 0, bad_as = 0, bad_neither = 0, bad_ap_both_fractional = 0;
  std::string first_ap;
  for (const auto& p : pairs) {
    const auto re = is_rigid(extended_divisor(p).fiber());
    const auto rv = is_rigid(extended_divisor_vee(p).fiber());
    const bool both = re.rigid && rv.rigid && re.distinguished && rv.distinguished;
    const bool ap = cond_alpha_plus(p), apf = cond_alpha_plus_fiber(p);
    const bool as = cond_alpha_star(p), b = cond_beta(p);
    n_ap += ap;
    n_apf += apf;
    n_as += as;
    n_b += b;
    if ((ap || b) && !both) {
      ++bad_ap;
      const auto fp = p.d_plus().frac().support();
      const auto fm = p.d_minus().frac().support();
      if (fp.size() == 1 && fm.size() == 1 && fp[0] == fm[0]) ++bad_ap_both_fractional;
      if (first_ap.empty()) {
        std::ostringstream os;
        os << "D_+ = " << p.d_plus().str() << ", D_- = " << p.d_minus().str();
        first_ap = os.str();
      }
    }
    if ((apf || b) && !both) ++bad_apf;
    if (as && !(re.rigid || rv.rigid)) ++bad_as;
    if (!as && !b) {
      ++n_neither;
      if (re.rigid || rv.rigid) ++bad_neither;
    }
  }
  c.notes.push_back(std::to_string(pairs.size()) + " non-toric pairs; (alpha+) " + std::to_string(n_ap) +
                    ", fiber form " + std::to_string(n_apf) + ", (alpha*) " + std::to_string(n_as) +
                    ", (beta) " + std::to_string(n_b) + ", neither " + std::to_string(n_neither));
  c.add("(alpha+) or (beta) => both distinguished and rigid", bad_ap == 0,
        std::to_string(bad_ap) + " counterexamples" + (first_ap.empty() ? "" : ", e.g. " + first_ap));
  c.add("(alpha*) => at least one rigid", bad_as == 0, std::to_string(bad_as) + " counterexamples");
  c.add("neither (alpha*) nor (beta) => neither rigid", bad_neither == 0,
        std::to_string(bad_neither) + " counterexamples");
  if (bad_ap > 0) {
    c.notes.push_back(std::to_string(bad_ap_both_fractional) + " of the " + std::to_string(bad_ap) +
                      " counterexamples have both fractional parts nonzero at one point; there the "
                      "inequality does not decide whether O+ and O- are (-1)-curves");
    c.notes.push_back("diagnostic, not counted: with (alpha+) read from the resolved fiber, " +
                      std::to_string(bad_apf) + " counterexamples");
  }
  return c;
}

Criterion ac6() {
  Criterion c{"AC6", "hand-built divisor [[0,0,-4,-2,-2]] with two (-1)-feathers at C_2", {}, {}};
  const auto f = fixture::two_feather_fiber();
  const auto r = is_rigid(f);
  const auto jumps = jump_pairs(f);
  auto has = [&](std::size_t feather, std::size_t to) {
    return std::find(jumps.begin(), jumps.end(), JumpPair{feather, 0, to}) != jumps.end();
  };
  c.add("stable under generalization", r.stable_generalization);
  // fiber index 1 is C_3, index 2 is C_4
  c.add("F_1 and F_2 jump to C_4", has(0, 2) && has(1, 2));
  const bool to_c3 = has(0, 1) && has(1, 1);
  c.add("F_1 and F_2 jump to C_3", to_c3,
        to_c3 ? "" : "beyond C_3 lie B_2(-1) and C_4(-2); C_4 does not contract, so no jump to C_3 exists");
  c.add("not rigid", !r.rigid);
  return c;
}

Criterion ac7() {
  Criterion c{"AC7", "xy = P(z), at most 5 roots of multiplicity at most 4", {}, {}};
  std::size_t total = 0, bad_fib = 0, bad_cstar_multi = 0, bad_cstar_single = 0, singles = 0;
  const std::vector<Point> roots{Point(0), Point(1), Point(-1), fixture::frac(1, 2), Point(3)};
  for (unsigned mask = 1; mask < 32; ++mask) {
    std::vector<std::size_t> chosen;
    for (std::size_t k = 0; k < 5; ++k) {
      if (mask >> k & 1) chosen.push_back(k);
    }
    std::vector<int> mult(chosen.size(), 1);
    while (true) {
      std::vector<std::pair<Point, std::int64_t>> poly;
      for (std::size_t k = 0; k < chosen.size(); ++k) poly.emplace_back(roots[chosen[k]], mult[k]);
      const auto p = surface_xy_p(poly);
      ++total;
      if (fibration_classes(p).count != FibrationCount::one) ++bad_fib;
      const bool unique = cstar_uniqueness(p).verdict == CstarVerdict::unique_up_to_conjugation_and_inversion;
      if (chosen.size() == 1) {
        ++singles;
        if (!unique) ++bad_cstar_single;
      } else if (!unique) {
        ++bad_cstar_multi;
      }
      std::size_t k = 0;
      while (k < mult.size() && mult[k] == 4) mult[k++] = 1;
      if (k == mult.size()) break;
      ++mult[k];
    }
  }
  c.add("fibration classes = one on " + std::to_string(total) + " polynomials", bad_fib == 0,
        std::to_string(bad_fib) + " failures");
  c.add("C*-action unique for P with two or more roots", bad_cstar_multi == 0,
        std::to_string(bad_cstar_multi) + " failures");
  c.add("C*-action unique for P = (z - p)^m", bad_cstar_single == 0,
        std::to_string(bad_cstar_single) + " of " + std::to_string(singles) +
            " are toric (xy = z^m) and carry non-conjugate C*-actions");
  return c;
}

Criterion ac8(const std::vector<DpdPair>& pairs) {
  Criterion c{"AC8", "property suites", {}, {}};

  std::size_t labels = 0, bad_hj = 0;
  for (std::int64_t m = 1; m <= 50; ++m) {
    for (std::int64_t e = 0; e < m; ++e) {
      if (std::gcd(e, m) != 1 || (e == 0 && m != 1)) continue;
      ++labels;
      const BoxLabel l(e, m);
      const Chain ch = hj_chain(l);
      if (chain_to_label(ch) != l) ++bad_hj;
      if (dual_label(dual_label(l)) != l) ++bad_hj;
      Chain rev(ch.rbegin(), ch.rend());
      if (hj_chain(dual_label(l)) != rev) ++bad_hj;
      if (m > 1 && oracle::evaluate_chain(ch) != Rational(Integer(m), Integer(e))) ++bad_hj;
      if (std::any_of(ch.begin(), ch.end(), [](Weight w) { return w > -2; })) ++bad_hj;
    }
  }
  c.add("HJ round trips and dual involution on " + std::to_string(labels) + " labels, m <= 50", bad_hj == 0,
        std::to_string(bad_hj) + " failures");

  const auto fibers = oracle::all_fibers(10);
  std::size_t bad_conf = 0;
  for (const auto& raw : fibers) {
    bool violation = false;
    const auto terms = oracle::small_terminal_states(oracle::small_state(raw), 0, &violation);
    const bool unique = !violation && terms.size() == 1 && terms[0].alive == 1 && terms[0].w[0] == 0;
    if (!unique || !contracts_to_zero_fiber(oracle::to_tree(raw)).ok) ++bad_conf;
  }
  c.add("contraction confluence on all " + std::to_string(fibers.size()) + " fibers with <= 10 vertices",
        bad_conf == 0, std::to_string(bad_conf) + " failures");

  std::size_t n_fibers = 0, bad_orth = 0, bad_valid = 0, bad_mother = 0, bad_interval = 0;
  for (const auto& p : pairs) {
    for (const auto& ext : {extended_divisor(p), extended_divisor_vee(p)}) {
      const auto& f = ext.fiber();
      ++n_fibers;
      if (!contracts_to_zero_fiber(f.tree()).ok) ++bad_valid;
      const auto tt = total_transforms(f);
      if (tt.size() + 1 != f.tree().size()) ++bad_orth;
      for (const auto& [a, ca] : tt) {
        for (const auto& [b, cb] : tt) {
          if (intersect(f.tree(), ca, cb) != Integer(a == b ? -1 : 0)) ++bad_orth;
        }
      }
      std::vector<std::size_t> mothers;
      try {
        mothers = bridge_mothers(f);
        for (const auto& v : f.tree().vertices()) {
          if (v.role.kind != Role::Kind::spine) mother_component(f, v.id);
        }
      } catch (const std::exception&) {
        ++bad_mother;
        continue;
      }
      for (std::size_t a = 0; a < mothers.size(); ++a) {
        const std::size_t ia = f.feathers()[a].index;
        if (mothers[a] > ia) ++bad_mother;
        for (std::size_t b = a + 1; b < mothers.size(); ++b) {
          const std::size_t ib = f.feathers()[b].index;
          if (mothers[a] >= ia || mothers[b] >= ib) continue;
          if (!(ia < mothers[b] + 1 || ib < mothers[a] + 1)) ++bad_interval;
        }
      }
    }
  }
  c.add("total transforms orthonormal on " + std::to_string(n_fibers) + " corpus fibers", bad_orth == 0,
        std::to_string(bad_orth) + " failures");
  c.add("every constructed extended divisor is a valid fiber", bad_valid == 0,
        std::to_string(bad_valid) + " failures");
  c.add("every feather component has one mother at or left of its bridge", bad_mother == 0,
        std::to_string(bad_mother) + " failures");
  c.add("intervals [mu+1, i] of bridges are disjoint", bad_interval == 0,
        std::to_string(bad_interval) + " overlaps");
  return c;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const auto pairs = corpus_pairs(2000);
  std::vector<Criterion> all;
  auto run = [&](Criterion (*fn)()) {
    try {
      all.push_back(fn());
    } catch (const std::exception& ex) {
      Criterion c{"AC?", "crashed", {}, {}};
      c.add("exception", false, ex.what());
      all.push_back(c);
    }
  };
  auto run_corpus = [&](Criterion (*fn)(const std::vector<DpdPair>&)) {
    try {
      all.push_back(fn(pairs));
    } catch (const std::exception& ex) {
      Criterion c{"AC?", "crashed", {}, {}};
      c.add("exception", false, ex.what());
      all.push_back(c);
    }
  };
  run(ac1);
  run(ac2);
  run(ac3);
  run(ac4);
  run_corpus(ac5);
  run(ac6);
  run(ac7);
  run_corpus(ac8);

  bool ok = true;
  for (const auto& c : all) {
    ok = ok && c.ok();
    std::cout << c.id << " " << (c.ok() ? "PASS" : "FAIL") << "  " << c.title << "\n";
    for (const auto& k : c.checks) {
      std::cout << "    [" << (k.ok ? "ok" : "FAIL") << "] " << k.what;
      if (!k.ok && !k.detail.empty()) std::cout << ": " << k.detail;
      std::cout << "\n";
    }
    for (const auto& n : c.notes) std::cout << "    note: " << n << "\n";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const auto passed = std::count_if(all.begin(), all.end(), [](const Criterion& c) { return c.ok(); });
  std::cout << passed << "/" << all.size() << " criteria pass (" << static_cast<int>(secs) << " s)\n";
  return ok ? 0 : 1;
}
