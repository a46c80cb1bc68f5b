#pragma once

#include <vector>

#include "labelkit/graph.hpp"
#include "labelkit/random.hpp"

namespace labelkit {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
/// Center 0 joined to leaves 1..leaves.
Graph star_graph(int leaves);
/// Disjoint union; node ids of `b` are shifted by a.size().
Graph disjoint_union(const Graph& a, const Graph& b);

/// G(n, p). Directed graphs draw each ordered pair independently.
Graph erdos_renyi(int n, double p, bool directed, Rng& rng);

/// Random simple graph whose degrees never exceed max_degree and are at
/// least 1 wherever the process allows: a shuffled node sequence is paired
/// greedily, then isolated nodes are attached to any node with spare degree.
Graph random_bounded_degree(int n, int max_degree, Rng& rng);

/// Random d-regular graph by the pairing model with restarts. n*d must be even.
Graph random_regular(int n, int d, Rng& rng);

/// Ring lattice with `k` neighbors per node (k even), each lattice edge
/// rewired with probability beta to a uniform non-neighbor.
Graph watts_strogatz(int n, int k, double beta, Rng& rng);

/// All graphs on n nodes up to isomorphism, in a fixed deterministic order.
/// Undirected n <= 6, directed n <= 4.
std::vector<Graph> enumerate_graphs(int n, bool directed = false, bool connected_only = false);

bool is_connected(const Graph& g);

/// Uniform random member subset of the given size.
std::vector<NodeId> random_subset(int n, int size, Rng& rng);

/// Random partial order on `members`: a random linear extension plus each
/// forward pair with probability p, closed transitively.
NodePoset random_poset(const std::vector<NodeId>& members, double p, Rng& rng);

/// Every partial order on {0..k-1} members mapped onto `members`, k <= 4.
std::vector<NodePoset> all_posets(const std::vector<NodeId>& members);

}  // namespace labelkit
