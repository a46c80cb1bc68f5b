#include "labelkit/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "labelkit/errors.hpp"

namespace labelkit {

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<NodeId> mapping) : mapping_(std::move(mapping)) {
  std::vector<bool> seen(mapping_.size(), false);
  for (NodeId v : mapping_) {
    if (v < 0 || v >= static_cast<NodeId>(mapping_.size()) || seen[v]) {
      throw InvalidArgument("permutation is not a bijection on 0.." +
                            std::to_string(mapping_.size() - 1));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<NodeId> m(n);
  std::iota(m.begin(), m.end(), 0);
  Permutation p;
  p.mapping_ = std::move(m);
  return p;
}

Permutation Permutation::random(int n, Rng& rng) {
  Permutation p = identity(n);
  shuffle(p.mapping_, rng);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<NodeId> inv(mapping_.size());
  for (std::size_t i = 0; i < mapping_.size(); ++i) inv[mapping_[i]] = static_cast<NodeId>(i);
  Permutation p;
  p.mapping_ = std::move(inv);
  return p;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) throw InvalidArgument("composing permutations of different size");
  std::vector<NodeId> m(inner.size());
  for (int i = 0; i < inner.size(); ++i) m[i] = outer(inner(i));
  return Permutation(std::move(m));
}

// ---------------------------------------------------------------------- Graph

namespace {

void check_node(NodeId v, int n) {
  if (v < 0 || v >= n) {
    throw InvalidArgument("node " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
  }
}

}  // namespace

Graph::Graph(int n, bool directed, std::vector<Edge> edges, std::vector<FeatureVec> node_features)
    : n_(n), directed_(directed) {
  if (n < 0) throw InvalidArgument("negative node count");
  if (node_features.empty()) {
    node_features_.assign(n, {});
  } else {
    if (static_cast<int>(node_features.size()) != n) {
      throw InvalidArgument("node feature table has " + std::to_string(node_features.size()) +
                            " rows for " + std::to_string(n) + " nodes");
    }
    node_features_ = std::move(node_features);
  }
  node_dim_ = n > 0 ? static_cast<int>(node_features_[0].size()) : 0;
  for (const auto& f : node_features_) {
    if (static_cast<int>(f.size()) != node_dim_) throw InvalidArgument("node feature widths differ");
  }

  std::map<NodePair, FeatureVec> arcs;
  edge_dim_ = edges.empty() ? 0 : static_cast<int>(edges[0].features.size());
  auto add_arc = [&](NodeId a, NodeId b, const FeatureVec& f) {
    auto [it, inserted] = arcs.emplace(NodePair{a, b}, f);
    if (!inserted && it->second != f) {
      throw InvalidArgument("edge (" + std::to_string(a) + "," + std::to_string(b) +
                            ") listed twice with different features");
    }
  };
  for (const Edge& e : edges) {
    check_node(e.from, n);
    check_node(e.to, n);
    if (e.from == e.to) throw InvalidArgument("self loop on node " + std::to_string(e.from));
    if (static_cast<int>(e.features.size()) != edge_dim_) throw InvalidArgument("edge feature widths differ");
    add_arc(e.from, e.to, e.features);
    if (!directed) add_arc(e.to, e.from, e.features);
  }

  out_.assign(n, {});
  out_features_.assign(n, {});
  if (directed) {
    in_.assign(n, {});
    in_features_.assign(n, {});
    undirected_.assign(n, {});
  }
  // std::map iteration is sorted by (from, to), so out lists come out sorted.
  for (const auto& [arc, f] : arcs) {
    out_[arc.first].push_back(arc.second);
    out_features_[arc.first].push_back(f);
  }
  if (directed) {
    std::map<NodePair, const FeatureVec*> reversed;
    for (const auto& [arc, f] : arcs) reversed.emplace(NodePair{arc.second, arc.first}, &f);
    for (const auto& [arc, f] : reversed) {
      in_[arc.first].push_back(arc.second);
      in_features_[arc.first].push_back(*f);
    }
    for (NodeId v = 0; v < n; ++v) {
      auto& u = undirected_[v];
      std::set_union(out_[v].begin(), out_[v].end(), in_[v].begin(), in_[v].end(),
                     std::back_inserter(u));
    }
  }
}

Graph Graph::from_pairs(int n, bool directed, std::span<const NodePair> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [a, b] : pairs) edges.push_back({a, b, {}});
  return Graph(n, directed, std::move(edges));
}

bool Graph::has_edge(NodeId from, NodeId to) const {
  if (from < 0 || from >= n_ || to < 0 || to >= n_) return false;
  return std::binary_search(out_[from].begin(), out_[from].end(), to);
}

const FeatureVec& Graph::edge_features(NodeId from, NodeId to) const {
  check_node(from, n_);
  const auto& list = out_[from];
  auto it = std::lower_bound(list.begin(), list.end(), to);
  if (it == list.end() || *it != to) {
    throw InvalidArgument("no edge (" + std::to_string(from) + "," + std::to_string(to) + ")");
  }
  return out_features_[from][it - list.begin()];
}

std::size_t Graph::num_arcs() const {
  std::size_t total = 0;
  for (const auto& l : out_) total += l.size();
  return total;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> result;
  for (NodeId v = 0; v < n_; ++v) {
    for (std::size_t k = 0; k < out_[v].size(); ++k) {
      const NodeId w = out_[v][k];
      if (!directed_ && w < v) continue;
      result.push_back({v, w, out_features_[v][k]});
    }
  }
  return result;
}

Graph Graph::with_node_features(std::vector<FeatureVec> features) const {
  Graph g = *this;
  if (static_cast<int>(features.size()) != n_) throw InvalidArgument("node feature table size mismatch");
  g.node_dim_ = n_ > 0 ? static_cast<int>(features[0].size()) : 0;
  for (const auto& f : features) {
    if (static_cast<int>(f.size()) != g.node_dim_) throw InvalidArgument("node feature widths differ");
  }
  g.node_features_ = std::move(features);
  return g;
}

Graph Graph::without_edge(NodeId a, NodeId b) const {
  std::vector<Edge> kept;
  for (Edge& e : edges()) {
    const bool hit = (e.from == a && e.to == b) || (!directed_ && e.from == b && e.to == a);
    if (!hit) kept.push_back(std::move(e));
  }
  Graph g(n_, directed_, std::move(kept), node_features_);
  g.edge_dim_ = edge_dim_;
  return g;
}

Graph Graph::induced(std::span<const NodeId> nodes) const {
  std::vector<NodeId> position(n_, -1);
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    check_node(nodes[k], n_);
    if (position[nodes[k]] != -1) throw InvalidArgument("duplicate node in induced subgraph");
    position[nodes[k]] = static_cast<NodeId>(k);
  }
  std::vector<Edge> edges;
  std::vector<FeatureVec> feats;
  feats.reserve(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const NodeId v = nodes[k];
    feats.push_back(node_features_[v]);
    for (std::size_t j = 0; j < out_[v].size(); ++j) {
      const NodeId w = position[out_[v][j]];
      if (w < 0) continue;
      if (!directed_ && w < static_cast<NodeId>(k)) continue;
      edges.push_back({static_cast<NodeId>(k), w, out_features_[v][j]});
    }
  }
  Graph g(static_cast<int>(nodes.size()), directed_, std::move(edges), std::move(feats));
  if (g.num_arcs() == 0) g.edge_dim_ = edge_dim_;
  if (nodes.empty()) g.node_dim_ = node_dim_;
  return g;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.n_ == b.n_ && a.directed_ == b.directed_ && a.node_dim_ == b.node_dim_ &&
         a.edge_dim_ == b.edge_dim_ && a.node_features_ == b.node_features_ && a.out_ == b.out_ &&
         a.out_features_ == b.out_features_;
}

Graph apply_permutation(const Graph& g, const Permutation& p) {
  if (p.size() != g.size()) {
    throw InvalidArgument("permutation of size " + std::to_string(p.size()) +
                          " applied to graph with " + std::to_string(g.size()) + " nodes");
  }
  std::vector<FeatureVec> feats(g.size());
  for (NodeId v = 0; v < g.size(); ++v) feats[p(v)] = g.node_features(v);
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) {
    e.from = p(e.from);
    e.to = p(e.to);
  }
  Graph out(g.size(), g.directed(), std::move(edges), std::move(feats));
  out.node_dim_ = g.node_dim_;
  out.edge_dim_ = g.edge_dim_;
  return out;
}

// ------------------------------------------------------------------ NodePoset

namespace {

std::vector<NodeId> sorted_unique(std::vector<NodeId> v) {
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end()) {
    throw ValidationError("duplicate member in node set");
  }
  return v;
}

}  // namespace

NodePoset NodePoset::set(std::vector<NodeId> members) {
  NodePoset s;
  s.members_ = sorted_unique(std::move(members));
  for (NodeId v : s.members_) s.relation_.push_back({v, v});
  return s;
}

NodePoset NodePoset::from_relation(std::vector<NodeId> members, std::vector<NodePair> relation) {
  NodePoset s;
  s.members_ = sorted_unique(std::move(members));
  std::sort(relation.begin(), relation.end());
  relation.erase(std::unique(relation.begin(), relation.end()), relation.end());
  auto in = [&](NodePair p) { return std::binary_search(relation.begin(), relation.end(), p); };
  for (auto [a, b] : relation) {
    if (!s.contains(a) || !s.contains(b)) {
      throw ValidationError("relation pair (" + std::to_string(a) + "," + std::to_string(b) +
                            ") involves a non-member");
    }
  }
  for (NodeId v : s.members_) {
    if (!in({v, v})) throw ValidationError("relation is not reflexive at node " + std::to_string(v));
  }
  for (auto [a, b] : relation) {
    if (a != b && in({b, a})) {
      throw ValidationError("relation is not antisymmetric: (" + std::to_string(a) + "," +
                            std::to_string(b) + ") and its reverse both present");
    }
  }
  for (auto [a, b] : relation) {
    for (auto it = std::lower_bound(relation.begin(), relation.end(), NodePair{b, INT32_MIN});
         it != relation.end() && it->first == b; ++it) {
      if (!in({a, it->second})) {
        throw ValidationError("relation is not transitive: (" + std::to_string(a) + "," +
                              std::to_string(b) + "),(" + std::to_string(b) + "," +
                              std::to_string(it->second) + ") present but not (" +
                              std::to_string(a) + "," + std::to_string(it->second) + ")");
      }
    }
  }
  s.relation_ = std::move(relation);
  return s;
}

NodePoset NodePoset::from_order(std::vector<NodeId> members, std::vector<NodePair> pairs) {
  std::vector<NodeId> m = sorted_unique(members);
  const std::size_t k = m.size();
  auto index = [&](NodeId v) -> std::size_t {
    auto it = std::lower_bound(m.begin(), m.end(), v);
    if (it == m.end() || *it != v) {
      throw ValidationError("relation pair involves non-member " + std::to_string(v));
    }
    return it - m.begin();
  };
  std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i) leq[i][i] = true;
  for (auto [a, b] : pairs) leq[index(a)][index(b)] = true;
  for (std::size_t w = 0; w < k; ++w)
    for (std::size_t i = 0; i < k; ++i)
      if (leq[i][w])
        for (std::size_t j = 0; j < k; ++j)
          if (leq[w][j]) leq[i][j] = true;
  std::vector<NodePair> rel;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (leq[i][j]) rel.push_back({m[i], m[j]});
  return from_relation(std::move(m), std::move(rel));
}

NodePoset NodePoset::chain(std::vector<NodeId> members) {
  std::vector<NodePair> pairs;
  for (std::size_t i = 0; i + 1 < members.size(); ++i) pairs.push_back({members[i], members[i + 1]});
  return from_order(std::move(members), std::move(pairs));
}

bool NodePoset::contains(NodeId v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool NodePoset::leq(NodeId u, NodeId v) const {
  return std::binary_search(relation_.begin(), relation_.end(), NodePair{u, v});
}

bool NodePoset::is_total() const {
  for (NodeId a : members_)
    for (NodeId b : members_)
      if (!leq(a, b) && !leq(b, a)) return false;
  return true;
}

NodePoset NodePoset::permuted(const Permutation& p) const {
  NodePoset s;
  for (NodeId v : members_) s.members_.push_back(p(v));
  std::sort(s.members_.begin(), s.members_.end());
  for (auto [a, b] : relation_) s.relation_.push_back({p(a), p(b)});
  std::sort(s.relation_.begin(), s.relation_.end());
  return s;
}

NodePoset NodePoset::remapped(std::span<const NodeId> old_to_new) const {
  NodePoset s;
  for (NodeId v : members_) s.members_.push_back(old_to_new[v]);
  std::sort(s.members_.begin(), s.members_.end());
  for (auto [a, b] : relation_) s.relation_.push_back({old_to_new[a], old_to_new[b]});
  std::sort(s.relation_.begin(), s.relation_.end());
  return s;
}

// ----------------------------------------------------------------- Hypergraph

Hypergraph::Hypergraph(int n, std::vector<std::vector<NodeId>> hyperedges,
                       std::vector<FeatureVec> node_features,
                       std::vector<FeatureVec> hyperedge_features)
    : n_(n), hyperedges_(std::move(hyperedges)) {
  if (n < 0) throw InvalidArgument("negative node count");
  for (std::size_t j = 0; j < hyperedges_.size(); ++j) {
    auto& e = hyperedges_[j];
    if (e.empty()) {
      throw ValidationError("hyperedge " + std::to_string(j) + " has no member nodes");
    }
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    for (NodeId v : e) check_node(v, n);
  }
  const int m = static_cast<int>(hyperedges_.size());
  if (!node_features.empty() && static_cast<int>(node_features.size()) != n) {
    throw InvalidArgument("hypergraph node feature table size mismatch");
  }
  if (!hyperedge_features.empty() && static_cast<int>(hyperedge_features.size()) != m) {
    throw InvalidArgument("hyperedge feature table size mismatch");
  }
  dim_ = !node_features.empty() && n > 0        ? static_cast<int>(node_features[0].size())
         : !hyperedge_features.empty() && m > 0 ? static_cast<int>(hyperedge_features[0].size())
                                                : 0;
  if (node_features.empty()) node_features.assign(n, FeatureVec(dim_));
  if (hyperedge_features.empty()) hyperedge_features.assign(m, FeatureVec(dim_));
  for (const auto& f : node_features)
    if (static_cast<int>(f.size()) != dim_) throw InvalidArgument("hypergraph feature widths differ");
  for (const auto& f : hyperedge_features)
    if (static_cast<int>(f.size()) != dim_) throw InvalidArgument("hypergraph feature widths differ");
  node_features_ = std::move(node_features);
  hyperedge_features_ = std::move(hyperedge_features);
}

bool Hypergraph::incident(NodeId i, int j) const {
  const auto& e = hyperedges_[j];
  return std::binary_search(e.begin(), e.end(), i);
}

Hypergraph Hypergraph::permuted(const Permutation& node_perm, const Permutation& edge_perm) const {
  if (node_perm.size() != n_ || edge_perm.size() != num_hyperedges()) {
    throw InvalidArgument("hypergraph permutation size mismatch");
  }
  std::vector<std::vector<NodeId>> edges(hyperedges_.size());
  std::vector<FeatureVec> efeats(hyperedges_.size());
  for (int j = 0; j < num_hyperedges(); ++j) {
    for (NodeId v : hyperedges_[j]) edges[edge_perm(j)].push_back(node_perm(v));
    efeats[edge_perm(j)] = hyperedge_features_[j];
  }
  std::vector<FeatureVec> nfeats(n_);
  for (NodeId v = 0; v < n_; ++v) nfeats[node_perm(v)] = node_features_[v];
  Hypergraph h(n_, std::move(edges), std::move(nfeats), std::move(efeats));
  h.dim_ = dim_;
  return h;
}

Graph incidence_graph(const Hypergraph& h) {
  const int n = h.num_nodes();
  const int m = h.num_hyperedges();
  std::vector<FeatureVec> feats;
  feats.reserve(n + m);
  for (NodeId i = 0; i < n; ++i) {
    FeatureVec f = h.node_features(i);
    f.push_back(Fixed::from_int(1));
    feats.push_back(std::move(f));
  }
  for (int j = 0; j < m; ++j) {
    FeatureVec f = h.hyperedge_features(j);
    f.push_back(Fixed::from_int(0));
    feats.push_back(std::move(f));
  }
  std::vector<Edge> edges;
  for (int j = 0; j < m; ++j)
    for (NodeId i : h.hyperedge(j)) edges.push_back({i, n + j, {}});
  return Graph(n + m, false, std::move(edges), std::move(feats));
}

}  // namespace labelkit
