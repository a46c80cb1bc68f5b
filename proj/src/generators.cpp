#include "labelkit/generators.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "labelkit/errors.hpp"
#include "labelkit/isomorphism.hpp"
#include "labelkit/structure.hpp"

namespace labelkit {

Graph path_graph(int n) {
  std::vector<NodePair> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph::from_pairs(n, false, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidArgument("cycle needs at least 3 nodes");
  std::vector<NodePair> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph::from_pairs(n, false, e);
}

Graph complete_graph(int n) {
  std::vector<NodePair> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph::from_pairs(n, false, e);
}

Graph star_graph(int leaves) {
  std::vector<NodePair> e;
  for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
  return Graph::from_pairs(leaves + 1, false, e);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  if (a.directed() != b.directed()) throw InvalidArgument("union of directed and undirected graph");
  std::vector<Edge> edges = a.edges();
  for (Edge e : b.edges()) {
    e.from += a.size();
    e.to += a.size();
    edges.push_back(std::move(e));
  }
  std::vector<FeatureVec> feats = a.all_node_features();
  for (const auto& f : b.all_node_features()) feats.push_back(f);
  return Graph(a.size() + b.size(), a.directed(), std::move(edges), std::move(feats));
}

Graph erdos_renyi(int n, double p, bool directed, Rng& rng) {
  std::vector<NodePair> e;
  for (int i = 0; i < n; ++i) {
    for (int j = directed ? 0 : i + 1; j < n; ++j) {
      if (i != j && uniform_unit(rng) < p) e.push_back({i, j});
    }
  }
  return Graph::from_pairs(n, directed, e);
}

namespace {

struct SimpleBuilder {
  explicit SimpleBuilder(int n) : adj(n) {}
  bool add(int u, int v) {
    if (u == v || adj[u].count(v)) return false;
    adj[u].insert(v);
    adj[v].insert(u);
    return true;
  }
  void remove(int u, int v) {
    adj[u].erase(v);
    adj[v].erase(u);
  }
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  Graph build() const {
    std::vector<NodePair> e;
    for (int u = 0; u < static_cast<int>(adj.size()); ++u)
      for (int v : adj[u])
        if (u < v) e.push_back({u, v});
    return Graph::from_pairs(static_cast<int>(adj.size()), false, e);
  }
  std::vector<std::set<int>> adj;
};

}  // namespace

Graph random_bounded_degree(int n, int max_degree, Rng& rng) {
  if (max_degree < 1) throw InvalidArgument("max_degree must be positive");
  SimpleBuilder b(n);
  if (n < 2) return b.build();
  const long attempts = 10L * n * max_degree;
  for (long t = 0; t < attempts; ++t) {
    const int u = static_cast<int>(uniform_below(rng, n));
    const int v = static_cast<int>(uniform_below(rng, n));
    if (b.degree(u) < max_degree && b.degree(v) < max_degree) b.add(u, v);
  }
  for (int v = 0; v < n; ++v) {
    if (b.degree(v) > 0) continue;
    std::vector<int> spare;
    for (int w = 0; w < n; ++w)
      if (w != v && b.degree(w) < max_degree) spare.push_back(w);
    if (!spare.empty()) b.add(v, spare[uniform_below(rng, spare.size())]);
  }
  return b.build();
}

Graph random_regular(int n, int d, Rng& rng) {
  if (d < 0 || d >= n || (n * d) % 2 != 0) throw InvalidArgument("no simple d-regular graph with these sizes");
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<int> stubs;
    for (int v = 0; v < n; ++v)
      for (int k = 0; k < d; ++k) stubs.push_back(v);
    shuffle(stubs, rng);
    SimpleBuilder b(n);
    bool ok = true;
    for (std::size_t i = 0; i + 1 < stubs.size() && ok; i += 2) ok = b.add(stubs[i], stubs[i + 1]);
    if (ok) return b.build();
  }
  throw InvalidArgument("pairing model did not produce a simple regular graph");
}

Graph watts_strogatz(int n, int k, double beta, Rng& rng) {
  if (k % 2 != 0 || k >= n) throw InvalidArgument("Watts-Strogatz needs even k < n");
  SimpleBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = 1; j <= k / 2; ++j) b.add(i, (i + j) % n);
  for (int j = 1; j <= k / 2; ++j) {
    for (int i = 0; i < n; ++i) {
      const int v = (i + j) % n;
      if (!b.adj[i].count(v) || uniform_unit(rng) >= beta) continue;
      if (b.degree(i) >= n - 1) continue;
      int w;
      do {
        w = static_cast<int>(uniform_below(rng, n));
      } while (w == i || b.adj[i].count(w));
      b.remove(i, v);
      b.add(i, w);
    }
  }
  return b.build();
}

bool is_connected(const Graph& g) {
  if (g.size() == 0) return true;
  const auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x == kUnreachable; });
}

std::vector<Graph> enumerate_graphs(int n, bool directed, bool connected_only) {
  if ((!directed && n > 6) || (directed && n > 4) || n < 0) {
    throw InvalidArgument("graph enumeration supports n <= 6 (undirected) or n <= 4 (directed)");
  }
  std::vector<NodePair> slots;
  for (int i = 0; i < n; ++i)
    for (int j = directed ? 0 : i + 1; j < n; ++j)
      if (i != j) slots.push_back({i, j});
  std::map<CanonicalCode, Graph> seen;
  std::vector<Graph> out;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<NodePair> e;
    for (std::size_t b = 0; b < slots.size(); ++b)
      if (mask >> b & 1) e.push_back(slots[b]);
    Graph g = Graph::from_pairs(n, directed, e);
    if (connected_only && !is_connected(g)) continue;
    CanonicalCode code = canonical_code(NodePoset(), g);
    if (seen.emplace(std::move(code), g).second) out.push_back(std::move(g));
  }
  return out;
}

std::vector<NodeId> random_subset(int n, int size, Rng& rng) {
  if (size < 0 || size > n) throw InvalidArgument("subset size out of range");
  std::vector<NodeId> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  shuffle(all, rng);
  all.resize(size);
  std::sort(all.begin(), all.end());
  return all;
}

NodePoset random_poset(const std::vector<NodeId>& members, double p, Rng& rng) {
  std::vector<NodeId> order = members;
  shuffle(order, rng);
  std::vector<NodePair> pairs;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (uniform_unit(rng) < p) pairs.push_back({order[i], order[j]});
  return NodePoset::from_order(members, pairs);
}

std::vector<NodePoset> all_posets(const std::vector<NodeId>& members) {
  const int k = static_cast<int>(members.size());
  if (k > 4) throw InvalidArgument("poset enumeration supports at most 4 members");
  std::vector<NodePair> slots;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j) slots.push_back({i, j});
  std::vector<NodePoset> out;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
    for (int i = 0; i < k; ++i) leq[i][i] = true;
    for (std::size_t b = 0; b < slots.size(); ++b)
      if (mask >> b & 1) leq[slots[b].first][slots[b].second] = true;
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      for (int j = 0; j < k && ok; ++j) {
        if (i != j && leq[i][j] && leq[j][i]) ok = false;
        for (int w = 0; w < k && ok; ++w)
          if (leq[i][j] && leq[j][w] && !leq[i][w]) ok = false;
      }
    if (!ok) continue;
    std::vector<NodePair> rel;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (leq[i][j]) rel.push_back({members[i], members[j]});
    out.push_back(NodePoset::from_relation(members, rel));
  }
  return out;
}

}  // namespace labelkit
