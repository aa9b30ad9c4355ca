#include "gizatullin/dualgraph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "gizatullin/errors.hpp"

namespace giz {

namespace {

Edge normalized(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

}  // namespace

WeightedTree::WeightedTree(Unchecked, std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end(),
            [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
  for (auto& e : edges_) e = normalized(e.first, e.second);
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    index_[vertices_[k].id] = k;
    adjacency_[vertices_[k].id];
  }
  for (const auto& [a, b] : edges_) {
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& [id, nbrs] : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

WeightedTree::WeightedTree(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : WeightedTree(Unchecked{}, std::move(vertices), std::move(edges)) {
  if (index_.size() != vertices_.size()) throw InvalidGraph("duplicate vertex id");
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const auto& [a, b] = edges_[k];
    if (a == b) throw InvalidGraph("loop at vertex " + std::to_string(a));
    if (!contains(a) || !contains(b)) throw InvalidGraph("edge refers to an unknown vertex");
    if (k > 0 && edges_[k - 1] == edges_[k]) throw InvalidGraph("repeated edge");
  }
  if (vertices_.empty()) {
    if (!edges_.empty()) throw InvalidGraph("edges without vertices");
    return;
  }
  if (edges_.size() + 1 != vertices_.size()) throw InvalidGraph("graph is not a tree");
  // n-1 edges and connected means acyclic
  std::set<int> seen{vertices_.front().id};
  std::vector<int> stack{vertices_.front().id};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adjacency_.at(v)) {
      if (seen.insert(w).second) stack.push_back(w);
    }
  }
  if (seen.size() != vertices_.size()) throw InvalidGraph("graph is not connected");
}

WeightedTree WeightedTree::chain(const Chain& weights) {
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    const int id = static_cast<int>(k);
    vs.push_back({id, weights[k], Role{Role::Kind::spine, id, 0}, "v_" + std::to_string(k)});
    if (k > 0) es.emplace_back(id - 1, id);
  }
  return WeightedTree(std::move(vs), std::move(es));
}

const Vertex& WeightedTree::vertex(int id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw std::out_of_range("no vertex " + std::to_string(id));
  return vertices_[it->second];
}

std::vector<int> WeightedTree::neighbors(int id) const {
  auto it = adjacency_.find(id);
  if (it == adjacency_.end()) throw std::out_of_range("no vertex " + std::to_string(id));
  return it->second;
}

std::vector<WeightedTree> WeightedTree::remove(const std::set<int>& removed) const {
  std::vector<WeightedTree> out;
  std::set<int> seen(removed.begin(), removed.end());
  for (const Vertex& start : vertices_) {
    if (seen.count(start.id)) continue;
    std::set<int> comp{start.id};
    seen.insert(start.id);
    std::vector<int> stack{start.id};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adjacency_.at(v)) {
        if (seen.insert(w).second) {
          comp.insert(w);
          stack.push_back(w);
        }
      }
    }
    std::vector<Vertex> vs;
    std::vector<Edge> es;
    for (int id : comp) vs.push_back(vertex(id));
    for (const Edge& e : edges_) {
      if (comp.count(e.first) && comp.count(e.second)) es.push_back(e);
    }
    out.push_back(WeightedTree(Unchecked{}, std::move(vs), std::move(es)));
  }
  return out;
}

// ---------------------------------------------------------------------------

Contraction contract(const WeightedTree& tree, const std::set<int>& frozen) {
  Contraction c;
  std::map<int, std::set<int>> adj;
  for (const Vertex& v : tree.vertices()) {
    c.weights[v.id] = v.weight;
    adj[v.id];
  }
  for (const auto& [a, b] : tree.edges()) {
    adj[a].insert(b);
    adj[b].insert(a);
  }
  for (;;) {
    int chosen = 0;
    bool found = false;
    for (const auto& [id, w] : c.weights) {
      if (w == -1 && adj[id].size() <= 2 && !frozen.count(id)) {
        chosen = id;
        found = true;
        break;
      }
    }
    if (!found) break;
    std::vector<int> nbrs(adj[chosen].begin(), adj[chosen].end());
    if (nbrs.size() == 2 && adj[nbrs[0]].count(nbrs[1])) {
      throw NonSncContraction("blowing down vertex " + std::to_string(chosen) +
                              " would join adjacent vertices");
    }
    for (int n : nbrs) {
      adj[n].erase(chosen);
      c.weights[n] += 1;
    }
    if (nbrs.size() == 2) {
      adj[nbrs[0]].insert(nbrs[1]);
      adj[nbrs[1]].insert(nbrs[0]);
    }
    adj.erase(chosen);
    c.weights.erase(chosen);
    c.record.push_back({chosen, nbrs});
  }
  for (const auto& [a, nbrs] : adj) {
    for (int b : nbrs) {
      if (a < b) c.edges.insert({a, b});
    }
  }
  return c;
}

bool is_contractible(const WeightedTree& tree) { return contract(tree).weights.empty(); }

bool is_contractible(const Forest& forest) {
  return std::all_of(forest.begin(), forest.end(),
                     [](const WeightedTree& t) { return is_contractible(t); });
}

ZeroFiber contracts_to_zero_fiber(const WeightedTree& tree) {
  Contraction c = contract(tree);
  ZeroFiber z;
  z.record = std::move(c.record);
  if (c.weights.size() == 1 && c.weights.begin()->second == 0) {
    z.ok = true;
    z.survivor = c.weights.begin()->first;
  }
  return z;
}

bool is_standard(const Zigzag& z) {
  if (z.size() < 2 || z[0] != 0 || z[1] != 0) return false;
  return std::all_of(z.begin() + 2, z.end(), [](Weight w) { return w <= -2; });
}

Zigzag reverse_zigzag(const Zigzag& z) {
  if (!is_standard(z)) throw NotStandard("zigzag is not in standard form");
  Zigzag out = z;
  std::reverse(out.begin() + 2, out.end());
  return out;
}

// ---------------------------------------------------------------------------

FiberGraph::FiberGraph(Chain spine, std::vector<AttachedFeather> feathers)
    : spine_(std::move(spine)), feathers_(std::move(feathers)) {
  if (spine_.empty()) throw InvalidFiber("fiber needs at least the component D_0");
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  for (std::size_t i = 0; i < spine_.size(); ++i) {
    const int id = static_cast<int>(i);
    vs.push_back({id, spine_[i], Role{Role::Kind::spine, id, 0}, spine_name(i)});
    if (i > 0) es.emplace_back(id - 1, id);
  }
  int next = static_cast<int>(spine_.size());
  for (std::size_t j = 0; j < feathers_.size(); ++j) {
    const AttachedFeather& af = feathers_[j];
    if (af.index > last()) throw InvalidFiber("feather attached beyond the last component");
    if (af.feather.bridge > -1) throw InvalidFiber("bridge weight must be <= -1");
    for (Weight w : af.feather.box) {
      if (w > -2) throw InvalidFiber("box weights must be <= -2");
    }
    const std::string name = af.name.empty() ? "B_" + std::to_string(j + 1) : af.name;
    feathers_[j].name = name;
    first_ids_.push_back(next);
    const int fj = static_cast<int>(j);
    vs.push_back({next, af.feather.bridge, Role{Role::Kind::bridge, fj, 0}, name});
    es.emplace_back(static_cast<int>(af.index), next);
    for (std::size_t k = 0; k < af.feather.box.size(); ++k) {
      const int id = next + 1 + static_cast<int>(k);
      vs.push_back({id, af.feather.box[k], Role{Role::Kind::box, fj, static_cast<int>(k) + 1},
                    name + "." + std::to_string(k + 1)});
      es.emplace_back(id - 1, id);
    }
    next += 1 + static_cast<int>(af.feather.box.size());
  }
  tree_ = WeightedTree(std::move(vs), std::move(es));
  Contraction c = contract(tree_, {0});
  if (c.weights.size() != 1 || c.weights.at(0) != 0) {
    throw InvalidFiber("graph does not blow down onto a 0-curve D_0: " + render_ascii(*this));
  }
  record_ = std::move(c.record);
}

std::vector<std::size_t> FiberGraph::feathers_at(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < feathers_.size(); ++j) {
    if (feathers_[j].index == i) out.push_back(j);
  }
  return out;
}

Forest subgraph_gt(const FiberGraph& f, std::size_t i) {
  if (i > f.last()) throw std::out_of_range("spine index out of range");
  Forest parts = f.tree().remove({f.spine_id(i)});
  if (i == 0) return parts;
  Forest out;
  for (auto& t : parts) {
    if (!t.contains(f.spine_id(0))) out.push_back(std::move(t));
  }
  return out;
}

WeightedTree subgraph_ge(const FiberGraph& f, std::size_t i) {
  if (i < 1 || i > f.last()) throw std::out_of_range("spine index out of range");
  for (auto& t : f.tree().remove({f.spine_id(i - 1)})) {
    if (t.contains(f.spine_id(i))) return t;
  }
  throw InternalError("component of D_i vanished");
}

Integer intersect(const WeightedTree& tree, const Cycle& x, const Cycle& y) {
  Integer sum = 0;
  for (const auto& [id, cx] : x) {
    if (cx == 0) continue;
    auto it = y.find(id);
    if (it != y.end()) sum += cx * it->second * tree.vertex(id).weight;
    for (int n : tree.neighbors(id)) {
      auto jt = y.find(n);
      if (jt != y.end()) sum += cx * jt->second;
    }
  }
  return sum;
}

std::map<int, Cycle> total_transforms(const FiberGraph& f) {
  // Blow D_0 back up by replaying the record backwards; a new exceptional
  // curve enters every earlier total transform with the sum of the
  // coefficients of the curves through the centre.
  std::map<int, Cycle> cycles;
  Cycle base{{f.spine_id(0), 1}};
  const auto& record = f.blowdowns();
  for (auto it = record.rbegin(); it != record.rend(); ++it) {
    auto pull_back = [&](Cycle& c) {
      Integer coeff = 0;
      for (int n : it->neighbors) {
        auto jt = c.find(n);
        if (jt != c.end()) coeff += jt->second;
      }
      if (coeff != 0) c[it->vertex] = coeff;
    };
    pull_back(base);
    for (auto& [id, c] : cycles) pull_back(c);
    cycles[it->vertex] = Cycle{{it->vertex, 1}};
  }
  return cycles;
}

// ---------------------------------------------------------------------------

ExtendedDivisor::ExtendedDivisor(FiberGraph fiber, std::size_t s_index,
                                 std::optional<std::size_t> tail)
    : fiber_(std::move(fiber)), s_(s_index), tail_(tail) {
  if (s_ < 2 || s_ > fiber_.last() + 2) throw InvalidFiber("C_s must lie on the fiber spine");
  if (tail_ && *tail_ >= fiber_.feathers().size()) throw InvalidFiber("unknown tail feather");
}

Zigzag ExtendedDivisor::zigzag() const {
  Zigzag z{0, 0};
  z.insert(z.end(), fiber_.spine().begin(), fiber_.spine().end());
  return z;
}

WeightedTree ExtendedDivisor::tree() const {
  std::vector<Vertex> vs = fiber_.tree().vertices();
  std::vector<Edge> es = fiber_.tree().edges();
  for (Vertex& v : vs) {
    if (v.role.kind == Role::Kind::spine) v.name = "C_" + std::to_string(v.role.index + 2);
  }
  vs.push_back({-2, 0, Role{Role::Kind::spine, -2, 0}, "C_0"});
  vs.push_back({-1, 0, Role{Role::Kind::spine, -1, 0}, "C_1"});
  es.emplace_back(-2, -1);
  es.emplace_back(-1, fiber_.spine_id(0));
  return WeightedTree(std::move(vs), std::move(es));
}

std::vector<std::size_t> ExtendedDivisor::collection() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < fiber_.feathers().size(); ++j) {
    if (!tail_ || *tail_ != j) out.push_back(j);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string to_dot(const Forest& forest) {
  std::ostringstream os;
  os << "graph {\n";
  for (const WeightedTree& t : forest) {
    for (const Vertex& v : t.vertices()) {
      os << "  v" << (v.id < 0 ? "m" : "") << (v.id < 0 ? -v.id : v.id) << " [label=\""
         << v.name << "(" << v.weight << ")\"];\n";
    }
    for (const auto& [a, b] : t.edges()) {
      auto node = [](int id) { return id < 0 ? "vm" + std::to_string(-id) : "v" + std::to_string(id); };
      os << "  " << node(a) << " -- " << node(b) << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const WeightedTree& tree) {
  if (tree.empty()) return to_dot(Forest{});
  return to_dot(Forest{tree});
}

std::string render_chain(const Chain& chain) {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < chain.size(); ++k) os << (k ? "," : "") << chain[k];
  os << "]";
  return os.str();
}

namespace {

std::string render_spine(const FiberGraph& f) {
  std::ostringstream os;
  const Chain& sp = f.spine();
  bool first = true;
  std::size_t i = 0;
  while (i < sp.size()) {
    if (!first) os << ",";
    first = false;
    const auto at = f.feathers_at(i);
    if (sp[i] == -2 && at.empty()) {
      std::size_t j = i;
      while (j < sp.size() && sp[j] == -2 && f.feathers_at(j).empty()) ++j;
      if (j - i >= 2) {
        os << "(-2)_" << (j - i);
        i = j;
        continue;
      }
    }
    os << sp[i];
    if (!at.empty()) {
      os << "{";
      for (std::size_t k = 0; k < at.size(); ++k) {
        const Feather& fe = f.feathers()[at[k]].feather;
        os << (k ? ";" : "") << "F:" << fe.bridge;
        if (!fe.box.empty()) os << render_chain(fe.box);
      }
      os << "}";
    }
    ++i;
  }
  return os.str();
}

}  // namespace

std::string render_ascii(const FiberGraph& f) { return "[" + render_spine(f) + "]"; }

std::string render_ascii(const ExtendedDivisor& ext) {
  return "[[0,0," + render_spine(ext.fiber()) + "]]";
}

}  // namespace giz
