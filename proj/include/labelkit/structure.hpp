#pragma once

#include <optional>
#include <span>
#include <vector>

#include "labelkit/graph.hpp"

namespace labelkit {

/// Marker for an unreachable node in distance vectors.
inline constexpr int kUnreachable = -1;

/// Hop distances from `source`, ignoring edge direction. Nodes flagged in
/// `masked` are removed together with their edges for this search only.
std::vector<int> bfs_distances(const Graph& g, NodeId source, std::span<const bool> masked = {});

/// Directed graph on the poset members (node k is members()[k]) with an arc
/// u -> v exactly when v covers u.
Graph hasse_diagram(const NodePoset& s);

struct EnclosingSubgraph {
  Graph graph;
  NodePoset targets;
  /// Original id of each subgraph node, ascending.
  std::vector<NodeId> nodes;
};

/// Subgraph induced by every node within `hops` of some member of `s`
/// (hop distance ignoring direction). std::nullopt means unbounded.
EnclosingSubgraph enclosing_subgraph(const Graph& g, const NodePoset& s, std::optional<int> hops);

}  // namespace labelkit
