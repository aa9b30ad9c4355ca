#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "gizatullin/dualgraph.hpp"

namespace giz {

/// Spine index mu with (total transform of the component) . D_mu = 1.
/// `vertex` is the id of a bridge or box component. Throws InternalError if
/// mu is missing or not unique.
std::size_t mother_component(const FiberGraph& f, int vertex);

/// Mother of every feather's bridge, by feather index.
std::vector<std::size_t> bridge_mothers(const FiberGraph& f);

/// No i in 1..N with subgraph_gt(f, i) non-empty and contractible.
bool is_distinguished(const FiberGraph& f);

/// Feather `feather` at D_from can move to D_to (to > from) under a
/// specialization.
struct JumpPair {
  std::size_t feather = 0;
  std::size_t from = 0;
  std::size_t to = 0;
  friend bool operator==(const JumpPair&, const JumpPair&) = default;
};

std::vector<JumpPair> jump_pairs(const FiberGraph& f);

/// Feather `feather` with bridge weight <= -2 at D_from detaches and
/// reattaches at its mother D_to with bridge weight -1.
struct GeneralizationMove {
  std::size_t feather = 0;
  std::size_t from = 0;
  std::size_t to = 0;
  FiberGraph result;
};

std::vector<GeneralizationMove> generalization_moves(const FiberGraph& f);

/// For every feather, the spine indices it can reach by one generalization
/// followed by at most one specialization, or by a direct specialization.
std::map<std::size_t, std::set<std::size_t>> reachable_positions(const FiberGraph& f);

struct RigidityReport {
  bool distinguished = false;
  bool all_bridges_minus_one = false;
  std::vector<std::size_t> mothers;  // by feather index
  std::vector<JumpPair> jumps;
  std::vector<GeneralizationMove> generalizations;
  bool stable_generalization = false;
  bool stable_specialization = false;
  bool rigid = false;
  /// Whether the sufficient criterion (distinguished, all bridges -1, and
  /// feathers at D_N or no contractible D^{>=i+1} behind a feather) applies.
  bool sufficient_criterion = false;
};

/// Exact decision: all bridges -1 and no jump pairs. Throws InternalError if
/// the sufficient criterion holds but the decision says otherwise.
RigidityReport is_rigid(const FiberGraph& f);

}  // namespace giz
