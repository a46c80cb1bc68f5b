#pragma once

#include <span>
#include <vector>

#include "labelkit/graph.hpp"
#include "labelkit/node_labeling.hpp"
#include "labelkit/wl.hpp"

namespace labelkit {

/// Tuple budgets for higher-order WL; inputs above them raise BudgetExceeded.
struct KwlBudget {
  int max_nodes_k2 = 10;
  int max_nodes_k3 = 7;
  /// Bound used by k,l-WL, which refines n^l labeled copies at once.
  int max_nodes_kl = 8;
};

/// Tuple colors of k-WL refined jointly over several graphs.
///
/// Tuple S of a graph with n nodes is stored at index sum_i S_i * n^(k-1-i).
/// Colors and graph colors are comparable across all graphs of one call.
struct TupleColoring {
  int k = 0;
  std::vector<std::vector<int>> tuple_colors;  // per graph
  std::vector<int> graph_colors;               // dense id of the tuple color multiset
  int rounds = 0;
};

/// Initial color of a tuple is its isomorphism type: node features and labels
/// of each position, the equality pattern, and the ordered adjacency
/// submatrix with edge features. Each round hashes the own color together
/// with, for every position i, the multiset of colors obtained by replacing
/// position i with each node. Runs until the class count is stable.
TupleColoring kwl_refine_joint(std::span<const LabeledGraph> graphs, int k, const KwlBudget& budget = {});
TupleColoring kwl_refine(const Graph& g, int k, const KwlBudget& budget = {});

/// l-tuple colors pooled from k-tuple colors: the color of S is the dense id
/// of the multiset of c_k(S ‖ S') over all S' in V^(k-l).
struct PooledColoring {
  int k = 0;
  int l = 0;
  std::vector<std::vector<int>> pooled_colors;  // per graph, indexed like l-tuples
  std::vector<int> graph_colors;
};

PooledColoring kwl_l_pooling_joint(std::span<const Graph> graphs, int k, int l, const KwlBudget& budget = {});
PooledColoring kwl_l_pooling(const Graph& g, int k, int l, const KwlBudget& budget = {});

/// k,l-WL: for each l-tuple S, mark position i on node S_i and run k-WL on the
/// marked graph; the tuple color is that run's graph color, and the graph
/// color pools all tuple colors. Marks are per-position indicator vectors,
/// which equals "feature i on S_i" for tuples of distinct nodes.
struct KlWlResult {
  int k = 0;
  int l = 0;
  std::vector<std::vector<int>> tuple_colors;  // per graph, indexed like l-tuples
  std::vector<int> graph_colors;
};

KlWlResult kl_wl_joint(std::span<const Graph> graphs, int k, int l, const KwlBudget& budget = {});
KlWlResult kl_wl(const Graph& g, int k, int l, const KwlBudget& budget = {});

/// k,l-WL tuple colors of two specific l-tuples, compared jointly.
bool kl_wl_tuples_equal(const Graph& g1, std::span<const NodeId> t1, const Graph& g2,
                        std::span<const NodeId> t2, int k, const KwlBudget& budget = {});

/// Index of an l-tuple in the layout used above.
std::size_t tuple_index(std::span<const NodeId> tuple, int n);

}  // namespace labelkit
