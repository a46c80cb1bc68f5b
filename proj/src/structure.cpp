#include "labelkit/structure.hpp"

#include <deque>
#include <numeric>

#include "labelkit/errors.hpp"

namespace labelkit {

std::vector<int> bfs_distances(const Graph& g, NodeId source, std::span<const bool> masked) {
  if (source < 0 || source >= g.size()) throw InvalidArgument("BFS source outside graph");
  std::vector<int> dist(g.size(), kUnreachable);
  auto blocked = [&](NodeId v) { return !masked.empty() && masked[v]; };
  if (blocked(source)) return dist;
  std::deque<NodeId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const NodeId v = queue.front();
    queue.pop_front();
    for (NodeId w : g.neighbors(v)) {
      if (dist[w] != kUnreachable || blocked(w)) continue;
      dist[w] = dist[v] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

Graph hasse_diagram(const NodePoset& s) {
  const auto& m = s.members();
  const int k = static_cast<int>(m.size());
  std::vector<NodePair> arcs;
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (a == b || !s.leq(m[a], m[b])) continue;
      bool covered = true;
      for (int w = 0; w < k && covered; ++w) {
        if (w != a && w != b && s.leq(m[a], m[w]) && s.leq(m[w], m[b])) covered = false;
      }
      if (covered) arcs.push_back({a, b});
    }
  }
  return Graph::from_pairs(k, true, arcs);
}

EnclosingSubgraph enclosing_subgraph(const Graph& g, const NodePoset& s, std::optional<int> hops) {
  for (NodeId v : s.members()) {
    if (v < 0 || v >= g.size()) throw InvalidArgument("target node outside graph");
  }
  if (!hops) {
    EnclosingSubgraph all{g, s, std::vector<NodeId>(g.size())};
    std::iota(all.nodes.begin(), all.nodes.end(), 0);
    return all;
  }
  if (*hops < 0) throw InvalidArgument("negative hop count");

  // Multi-source BFS truncated at the hop limit.
  std::vector<int> dist(g.size(), kUnreachable);
  std::deque<NodeId> queue;
  for (NodeId v : s.members()) {
    dist[v] = 0;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    const NodeId v = queue.front();
    queue.pop_front();
    if (dist[v] == *hops) continue;
    for (NodeId w : g.neighbors(v)) {
      if (dist[w] != kUnreachable) continue;
      dist[w] = dist[v] + 1;
      queue.push_back(w);
    }
  }
  EnclosingSubgraph sub;
  std::vector<NodeId> old_to_new(g.size(), -1);
  for (NodeId v = 0; v < g.size(); ++v) {
    if (dist[v] == kUnreachable) continue;
    old_to_new[v] = static_cast<NodeId>(sub.nodes.size());
    sub.nodes.push_back(v);
  }
  sub.graph = g.induced(sub.nodes);
  sub.targets = s.remapped(old_to_new);
  return sub;
}

}  // namespace labelkit
