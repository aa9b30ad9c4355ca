#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gizatullin/exactmath.hpp"

namespace giz {

/// Which part of a fiber or extended divisor a vertex models.
struct Role {
  enum class Kind { spine, bridge, box };
  Kind kind = Kind::spine;
  int index = 0;     // spine index, or the feather's position in its fiber
  int position = 0;  // position inside the box, counted from the bridge
  friend bool operator==(const Role&, const Role&) = default;
};

struct Vertex {
  int id = 0;
  Weight weight = 0;
  Role role;
  std::string name;
};

using Edge = std::pair<int, int>;

/// A finite weighted tree. The empty tree is allowed.
class WeightedTree {
 public:
  WeightedTree() = default;
  /// Throws InvalidGraph on duplicate ids, dangling or repeated edges,
  /// loops, cycles or disconnectedness.
  WeightedTree(std::vector<Vertex> vertices, std::vector<Edge> edges);

  /// Linear chain with ids 0..n-1 and names v_0..v_{n-1}.
  static WeightedTree chain(const Chain& weights);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  /// Normalized so that first < second, sorted.
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }

  bool contains(int id) const { return index_.count(id) != 0; }
  const Vertex& vertex(int id) const;
  std::vector<int> neighbors(int id) const;

  /// Connected components left after deleting `removed`.
  std::vector<WeightedTree> remove(const std::set<int>& removed) const;

 private:
  struct Unchecked {};
  WeightedTree(Unchecked, std::vector<Vertex> vertices, std::vector<Edge> edges);

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::map<int, std::size_t> index_;
  std::map<int, std::vector<int>> adjacency_;
};

using Forest = std::vector<WeightedTree>;

/// One blowdown: the contracted vertex and its neighbors at that moment.
struct Blowdown {
  int vertex = 0;
  std::vector<int> neighbors;
};

/// Outcome of greedy contraction: the surviving vertices with their weights
/// and adjacency, plus the ordered blowdown record.
struct Contraction {
  std::map<int, Weight> weights;
  std::set<Edge> edges;
  std::vector<Blowdown> record;
};

/// Repeatedly blows down the lowest-id vertex of weight -1 and degree <= 2
/// that is not frozen. Throws NonSncContraction when a blowdown would join
/// two already adjacent vertices.
Contraction contract(const WeightedTree& tree, const std::set<int>& frozen = {});

bool is_contractible(const WeightedTree& tree);
bool is_contractible(const Forest& forest);

struct ZeroFiber {
  bool ok = false;
  std::vector<Blowdown> record;
  std::optional<int> survivor;
};

/// Whether the tree blows down to a single vertex of weight 0.
ZeroFiber contracts_to_zero_fiber(const WeightedTree& tree);

using Zigzag = std::vector<Weight>;

/// [[0,0,w_2,...,w_n]] with every w_j <= -2 (n = 1 allowed: [[0,0]]).
bool is_standard(const Zigzag& z);
/// [[0,0,w_n,...,w_2]]; throws NotStandard.
Zigzag reverse_zigzag(const Zigzag& z);

struct Feather {
  Weight bridge = -1;
  Chain box;
  friend bool operator==(const Feather&, const Feather&) = default;
};

struct AttachedFeather {
  std::size_t index = 0;
  Feather feather;
  std::string name;
};

/// Total transform of a component as coefficients over component ids.
using Cycle = std::map<int, Integer>;

/// Degenerate fiber D_0 + ... + D_N plus feathers. D_0 is the component that
/// survives when the fiber is blown down to a 0-curve; construction throws
/// InvalidFiber unless this is possible without touching D_0.
class FiberGraph {
 public:
  FiberGraph(Chain spine, std::vector<AttachedFeather> feathers);

  const Chain& spine() const { return spine_; }
  /// Index of the last spine component.
  std::size_t last() const { return spine_.size() - 1; }
  const std::vector<AttachedFeather>& feathers() const { return feathers_; }

  /// Vertex ids: spine D_i is i; feather j takes bridge_id(j), then its box.
  const WeightedTree& tree() const { return tree_; }
  int spine_id(std::size_t i) const { return static_cast<int>(i); }
  int bridge_id(std::size_t j) const { return first_ids_.at(j); }
  int box_id(std::size_t j, std::size_t k) const {
    return first_ids_.at(j) + 1 + static_cast<int>(k);
  }

  const std::vector<Blowdown>& blowdowns() const { return record_; }

  /// Feather indices attached at D_i.
  std::vector<std::size_t> feathers_at(std::size_t i) const;

  std::string spine_name(std::size_t i) const { return "D_" + std::to_string(i); }

 private:
  Chain spine_;
  std::vector<AttachedFeather> feathers_;
  std::vector<int> first_ids_;
  WeightedTree tree_;
  std::vector<Blowdown> record_;
};

/// Components of the fiber minus D_i not containing D_0 (everything else for
/// i = 0). Feathers attached at D_i appear as their own components.
Forest subgraph_gt(const FiberGraph& f, std::size_t i);

/// Component of the fiber minus D_{i-1} containing D_i; requires 1 <= i <= N.
WeightedTree subgraph_ge(const FiberGraph& f, std::size_t i);

/// Intersection number of two cycles on the fiber.
Integer intersect(const WeightedTree& tree, const Cycle& x, const Cycle& y);

/// Total transforms of every component created while blowing D_0 up to the
/// fiber, keyed by vertex id. D_0 itself is not listed.
std::map<int, Cycle> total_transforms(const FiberGraph& f);

/// The fiber together with C_0 and C_1: spine C_0, C_1, C_2 = D_0, ...
class ExtendedDivisor {
 public:
  /// `tail` is the feather F_0 at the last component, if any.
  ExtendedDivisor(FiberGraph fiber, std::size_t s_index, std::optional<std::size_t> tail = {});

  const FiberGraph& fiber() const { return fiber_; }
  /// Spine position of the parabolic component C_s (s >= 2).
  std::size_t s_index() const { return s_; }
  Zigzag zigzag() const;

  /// Whole divisor as a tree; C_0 and C_1 get ids -2 and -1, fiber ids
  /// carry over, spine names are C_i.
  WeightedTree tree() const;

  /// The feathers F_1, F_2, ... at C_s (everything but the tail).
  std::vector<std::size_t> collection() const;
  std::optional<std::size_t> tail() const { return tail_; }

 private:
  FiberGraph fiber_;
  std::size_t s_;
  std::optional<std::size_t> tail_;
};

/// Graphviz text for an undirected graph, labels "name(weight)".
std::string to_dot(const WeightedTree& tree);
std::string to_dot(const Forest& forest);

/// Bracket notation: runs of featherless -2 become (-2)_k, feathers are
/// annotated as {F:bridge} or {F:bridge[box]}, several joined with ';'.
std::string render_ascii(const ExtendedDivisor& ext);
std::string render_ascii(const FiberGraph& f);
std::string render_chain(const Chain& chain);

}  // namespace giz
