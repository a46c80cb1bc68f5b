#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "labelkit/fixed.hpp"
#include "labelkit/random.hpp"

namespace labelkit {

/// Nodes are 0-based in the library API. Files and the CLI use 1-based ids.
using NodeId = int;
using NodePair = std::pair<NodeId, NodeId>;

/// Bijection on {0, ..., n-1}; node i moves to (*this)(i).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<NodeId> mapping);

  static Permutation identity(int n);
  static Permutation random(int n, Rng& rng);

  int size() const { return static_cast<int>(mapping_.size()); }
  NodeId operator()(NodeId i) const { return mapping_[i]; }
  const std::vector<NodeId>& mapping() const { return mapping_; }
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<NodeId> mapping_;
};

/// Returns outer ∘ inner, i.e. i -> outer(inner(i)).
Permutation compose(const Permutation& outer, const Permutation& inner);

struct Edge {
  NodeId from = 0;
  NodeId to = 0;
  FeatureVec features;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Attributed, possibly directed graph without self loops.
///
/// Node features occupy the diagonal of the adjacency tensor and edge
/// features the off-diagonal entries. All node feature vectors share one
/// dimension, as do all edge feature vectors. An undirected graph stores
/// each edge in both directions with equal features. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Undirected input edges may be listed in either or both orientations;
  /// duplicates collapse. Conflicting duplicate features are rejected.
  Graph(int n, bool directed, std::vector<Edge> edges,
        std::vector<FeatureVec> node_features = {});

  static Graph from_pairs(int n, bool directed, std::span<const NodePair> pairs);

  int size() const { return n_; }
  bool directed() const { return directed_; }
  int node_dim() const { return node_dim_; }
  int edge_dim() const { return edge_dim_; }

  const FeatureVec& node_features(NodeId v) const { return node_features_[v]; }
  const std::vector<FeatureVec>& all_node_features() const { return node_features_; }

  bool has_edge(NodeId from, NodeId to) const;
  /// Features of the edge from -> to; throws if the edge is absent.
  const FeatureVec& edge_features(NodeId from, NodeId to) const;

  std::span<const NodeId> out_neighbors(NodeId v) const { return out_[v]; }
  std::span<const NodeId> in_neighbors(NodeId v) const {
    return directed_ ? std::span<const NodeId>(in_[v]) : std::span<const NodeId>(out_[v]);
  }
  /// Features aligned with out_neighbors(v) / in_neighbors(v).
  std::span<const FeatureVec> out_edge_features(NodeId v) const { return out_features_[v]; }
  std::span<const FeatureVec> in_edge_features(NodeId v) const {
    return directed_ ? std::span<const FeatureVec>(in_features_[v])
                     : std::span<const FeatureVec>(out_features_[v]);
  }
  /// Neighbors ignoring direction, sorted and distinct.
  std::span<const NodeId> neighbors(NodeId v) const {
    return directed_ ? std::span<const NodeId>(undirected_[v]) : std::span<const NodeId>(out_[v]);
  }
  int degree(NodeId v) const { return static_cast<int>(neighbors(v).size()); }

  /// Number of stored arcs: 2|E| for undirected graphs.
  std::size_t num_arcs() const;
  /// Undirected graphs list each edge once with from < to.
  std::vector<Edge> edges() const;

  Graph with_node_features(std::vector<FeatureVec> features) const;
  /// Drops the edge (both directions when undirected). Missing edges are ignored.
  Graph without_edge(NodeId a, NodeId b) const;
  /// Induced subgraph; node k of the result is nodes[k].
  Graph induced(std::span<const NodeId> nodes) const;

  friend bool operator==(const Graph& a, const Graph& b);
  friend Graph apply_permutation(const Graph& g, const Permutation& p);

 private:
  int n_ = 0;
  bool directed_ = false;
  int node_dim_ = 0;
  int edge_dim_ = 0;
  std::vector<FeatureVec> node_features_;
  std::vector<std::vector<NodeId>> out_;
  std::vector<std::vector<FeatureVec>> out_features_;
  std::vector<std::vector<NodeId>> in_;
  std::vector<std::vector<FeatureVec>> in_features_;
  std::vector<std::vector<NodeId>> undirected_;
};

Graph apply_permutation(const Graph& g, const Permutation& p);

/// Node subset with a partial order. A plain set carries only reflexive pairs.
class NodePoset {
 public:
  NodePoset() = default;

  static NodePoset set(std::vector<NodeId> members);
  /// `relation` must already be a partial order on `members` including all
  /// reflexive pairs. Violations throw ValidationError naming the axiom.
  static NodePoset from_relation(std::vector<NodeId> members, std::vector<NodePair> relation);
  /// Adds reflexive and transitive closure to `pairs`, then validates antisymmetry.
  static NodePoset from_order(std::vector<NodeId> members, std::vector<NodePair> pairs);
  /// Total order members[0] <= members[1] <= ...
  static NodePoset chain(std::vector<NodeId> members);

  const std::vector<NodeId>& members() const { return members_; }
  /// Sorted, reflexive pairs included.
  const std::vector<NodePair>& relation() const { return relation_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(NodeId v) const;
  bool leq(NodeId u, NodeId v) const;
  bool is_set() const { return relation_.size() == members_.size(); }
  bool is_total() const;

  NodePoset permuted(const Permutation& p) const;
  /// Same relation with every node id remapped through `old_to_new`.
  NodePoset remapped(std::span<const NodeId> old_to_new) const;

  friend bool operator==(const NodePoset&, const NodePoset&) = default;

 private:
  std::vector<NodeId> members_;
  std::vector<NodePair> relation_;
};

/// Hypergraph with n nodes and m hyperedges given by member lists.
class Hypergraph {
 public:
  Hypergraph() = default;
  /// Every hyperedge needs at least one member. Missing feature tables
  /// default to width-0 rows; given tables must share one width d.
  Hypergraph(int n, std::vector<std::vector<NodeId>> hyperedges,
             std::vector<FeatureVec> node_features = {},
             std::vector<FeatureVec> hyperedge_features = {});

  int num_nodes() const { return n_; }
  int num_hyperedges() const { return static_cast<int>(hyperedges_.size()); }
  int feature_dim() const { return dim_; }
  const std::vector<NodeId>& hyperedge(int j) const { return hyperedges_[j]; }
  const std::vector<std::vector<NodeId>>& hyperedges() const { return hyperedges_; }
  bool incident(NodeId i, int j) const;
  const FeatureVec& node_features(NodeId i) const { return node_features_[i]; }
  const FeatureVec& hyperedge_features(int j) const { return hyperedge_features_[j]; }

  /// Action of (node_perm, edge_perm) on the incidence matrix and features.
  Hypergraph permuted(const Permutation& node_perm, const Permutation& edge_perm) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int n_ = 0;
  int dim_ = 0;
  std::vector<std::vector<NodeId>> hyperedges_;
  std::vector<FeatureVec> node_features_;
  std::vector<FeatureVec> hyperedge_features_;
};

/// Bipartite incidence graph: nodes 0..n-1 are hypergraph nodes, n..n+m-1
/// hyperedges. Features are the original ones plus a trailing origin flag,
/// 1 for hypergraph nodes and 0 for hyperedge nodes.
Graph incidence_graph(const Hypergraph& h);

}  // namespace labelkit
