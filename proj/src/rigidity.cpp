#include "gizatullin/rigidity.hpp"

#include <algorithm>

#include "gizatullin/errors.hpp"

namespace giz {

namespace {

std::size_t mother_from(const FiberGraph& f, const Cycle& total, int vertex) {
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i <= f.last(); ++i) {
    const Integer x = intersect(f.tree(), total, Cycle{{f.spine_id(i), 1}});
    if (x == 1) hits.push_back(i);
  }
  if (hits.size() != 1) {
    throw InternalError("component " + f.tree().vertex(vertex).name + " has " +
                        std::to_string(hits.size()) + " candidate mother components");
  }
  return hits.front();
}

bool empty_or_contractible(const Forest& forest) {
  return forest.empty() || is_contractible(forest);
}

}  // namespace

std::size_t mother_component(const FiberGraph& f, int vertex) {
  const auto totals = total_transforms(f);
  auto it = totals.find(vertex);
  if (it == totals.end() || f.tree().vertex(vertex).role.kind == Role::Kind::spine) {
    throw std::invalid_argument("mother components are defined for feather components only");
  }
  return mother_from(f, it->second, vertex);
}

std::vector<std::size_t> bridge_mothers(const FiberGraph& f) {
  const auto totals = total_transforms(f);
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < f.feathers().size(); ++j) {
    const int id = f.bridge_id(j);
    out.push_back(mother_from(f, totals.at(id), id));
  }
  return out;
}

bool is_distinguished(const FiberGraph& f) {
  for (std::size_t i = 1; i <= f.last(); ++i) {
    const Forest beyond = subgraph_gt(f, i);
    if (!beyond.empty() && is_contractible(beyond)) return false;
  }
  return true;
}

std::vector<JumpPair> jump_pairs(const FiberGraph& f) {
  std::vector<JumpPair> out;
  const std::size_t n = f.last();
  for (std::size_t i = 0; i < n; ++i) {
    const auto here = f.feathers_at(i);
    if (here.empty()) continue;
    if (!is_contractible(subgraph_ge(f, i + 1))) continue;
    for (std::size_t target = i + 1; target <= n; ++target) {
      bool between_ok = true;
      for (std::size_t k = i + 1; k < target && between_ok; ++k) {
        for (std::size_t j : f.feathers_at(k)) {
          // the feather alone, cut off the spine at D_k
          Forest piece;
          for (auto& t : f.tree().remove({f.spine_id(k)})) {
            if (t.contains(f.bridge_id(j))) piece.push_back(std::move(t));
          }
          if (!empty_or_contractible(piece)) between_ok = false;
        }
      }
      if (!between_ok) continue;
      if (!empty_or_contractible(subgraph_gt(f, target))) continue;
      for (std::size_t j : here) out.push_back({j, i, target});
    }
  }
  return out;
}

std::vector<GeneralizationMove> generalization_moves(const FiberGraph& f) {
  std::vector<GeneralizationMove> out;
  const auto mothers = bridge_mothers(f);
  for (std::size_t j = 0; j < f.feathers().size(); ++j) {
    const AttachedFeather& af = f.feathers()[j];
    if (af.feather.bridge > -2) continue;
    if (mothers[j] >= af.index) {
      throw InternalError("bridge " + af.name + " of weight <= -2 has its mother at or beyond D_" +
                          std::to_string(af.index));
    }
    std::vector<AttachedFeather> moved = f.feathers();
    moved[j].index = mothers[j];
    moved[j].feather.bridge = -1;
    try {
      out.push_back({j, af.index, mothers[j], FiberGraph(f.spine(), std::move(moved))});
    } catch (const InvalidFiber& ex) {
      throw InternalError(std::string("generalization produced an invalid fiber: ") + ex.what());
    }
  }
  return out;
}

std::map<std::size_t, std::set<std::size_t>> reachable_positions(const FiberGraph& f) {
  std::map<std::size_t, std::set<std::size_t>> out;
  for (std::size_t j = 0; j < f.feathers().size(); ++j) out[j];
  for (const JumpPair& jp : jump_pairs(f)) out[jp.feather].insert(jp.to);
  for (const GeneralizationMove& g : generalization_moves(f)) {
    out[g.feather].insert(g.to);
    for (const JumpPair& jp : jump_pairs(g.result)) {
      if (jp.feather == g.feather) out[g.feather].insert(jp.to);
    }
  }
  return out;
}

RigidityReport is_rigid(const FiberGraph& f) {
  RigidityReport r;
  r.distinguished = is_distinguished(f);
  r.mothers = bridge_mothers(f);
  r.all_bridges_minus_one = std::all_of(f.feathers().begin(), f.feathers().end(),
                                        [](const AttachedFeather& a) { return a.feather.bridge == -1; });
  r.jumps = jump_pairs(f);
  r.generalizations = generalization_moves(f);
  r.stable_generalization = r.all_bridges_minus_one;
  r.stable_specialization = r.jumps.empty();
  r.rigid = r.stable_generalization && r.stable_specialization;

  const std::size_t n = f.last();
  bool tail_condition = !f.feathers_at(n).empty();
  bool behind_condition = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (!f.feathers_at(i).empty() && is_contractible(subgraph_ge(f, i + 1))) {
      behind_condition = false;
    }
  }
  r.sufficient_criterion =
      r.distinguished && r.all_bridges_minus_one && (tail_condition || behind_condition);
  if (r.sufficient_criterion && !r.rigid) {
    throw InternalError("sufficient rigidity criterion holds but a jump was found: " +
                        render_ascii(f));
  }
  if (r.all_bridges_minus_one != r.generalizations.empty()) {
    throw InternalError("generalization moves disagree with bridge weights");
  }
  return r;
}

}  // namespace giz
