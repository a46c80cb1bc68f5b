#include "labelkit/heuristics.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "labelkit/errors.hpp"
#include "labelkit/generators.hpp"

namespace labelkit {
namespace {

TEST(Heuristics, CommonNeighbors) {
  EXPECT_EQ(common_neighbors(complete_graph(3), 0, 1), 1);
  const Graph c6 = cycle_graph(6);
  EXPECT_EQ(common_neighbors(c6, 0, 2), 1);
  EXPECT_EQ(common_neighbors(c6, 0, 1), 0);
  EXPECT_EQ(common_neighbors(disjoint_union(path_graph(2), path_graph(2)), 0, 2), 0);
  EXPECT_THROW(common_neighbors(c6, 2, 2), InvalidArgument);
}

TEST(Heuristics, WeightedScores) {
  const Graph p = path_graph(3);
  EXPECT_DOUBLE_EQ(resource_allocation(p, 0, 2), 0.5);
  EXPECT_NEAR(adamic_adar(p, 0, 2), 1.0 / std::log(2.0), 1e-12);
  EXPECT_NEAR(adamic_adar(p, 0, 2), 1.4427, 1e-4);
  EXPECT_EQ(score_pair(cycle_graph(6), 0, 1), (HeuristicScores{0, 0.0, 0.0}));
}

TEST(Heuristics, DirectedUsesOutNeighbors) {
  const std::vector<NodePair> arcs{{0, 2}, {1, 2}, {3, 0}, {3, 1}};
  const Graph g = Graph::from_pairs(4, true, arcs);
  EXPECT_EQ(common_neighbors(g, 0, 1), 1);
  EXPECT_EQ(common_neighbors(g, 2, 3), 0);
}

TEST(Heuristics, AdamicAdarDomain) {
  // Directed: the common out-neighbor has two in-arcs, so degree 2; fine.
  const std::vector<NodePair> arcs{{0, 2}, {1, 2}};
  EXPECT_NO_THROW(adamic_adar(Graph::from_pairs(3, true, arcs), 0, 1));
}

TEST(Heuristics, RefinementCheckOnCycleAndRandom) {
  Rng rng(5);
  std::vector<Graph> graphs{cycle_graph(6), random_regular(16, 3, rng), erdos_renyi(30, 0.12, false, rng)};
  std::vector<PairRef> targets;
  for (std::size_t gi = 0; gi < graphs.size(); ++gi)
    for (NodeId i = 0; i < graphs[gi].size(); ++i)
      for (NodeId j = i + 1; j < graphs[gi].size(); ++j) targets.push_back({gi, i, j});
  const HeuristicCheckReport r = heuristic_refinement_check(graphs, targets, 3, 2000, 1);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.pair_pairs, 2000u);
  EXPECT_GT(r.class_pairs, 0u);
  bool c6 = false;
  for (const auto& [a, b] : r.unlabeled_witnesses) c6 = c6 || (a.graph == 0 && b.graph == 0);
  EXPECT_TRUE(c6);
}

}  // namespace
}  // namespace labelkit
