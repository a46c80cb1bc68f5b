#include "labelkit/kwl.hpp"

#include <gtest/gtest.h>

#include "labelkit/errors.hpp"
#include "labelkit/generators.hpp"

namespace labelkit {
namespace {

Graph two_triangles() { return disjoint_union(complete_graph(3), complete_graph(3)); }

bool graph_colors_equal(const Graph& a, const Graph& b, int k) {
  const std::vector<LabeledGraph> parts{{&a, nullptr}, {&b, nullptr}};
  const TupleColoring t = kwl_refine_joint(parts, k);
  return t.graph_colors[0] == t.graph_colors[1];
}

TEST(Kwl, TwoWlMatchesOneWlOnCycles) { EXPECT_TRUE(graph_colors_equal(cycle_graph(6), two_triangles(), 2)); }

TEST(Kwl, ThreeWlSeesTriangles) { EXPECT_FALSE(graph_colors_equal(cycle_graph(6), two_triangles(), 3)); }

TEST(Kwl, TupleIndexLayout) {
  const std::vector<NodeId> t{2, 0, 1};
  EXPECT_EQ(tuple_index(t, 4), 2u * 16 + 0 * 4 + 1);
}

TEST(Kwl, PermutationInvariantTupleColors) {
  Rng rng(6);
  const Graph g = erdos_renyi(6, 0.5, false, rng);
  const Permutation p = Permutation::random(6, rng);
  const Graph h = apply_permutation(g, p);
  const std::vector<LabeledGraph> parts{{&g, nullptr}, {&h, nullptr}};
  const TupleColoring t = kwl_refine_joint(parts, 2);
  for (NodeId a = 0; a < 6; ++a) {
    for (NodeId b = 0; b < 6; ++b) {
      const std::vector<NodeId> x{a, b}, y{p(a), p(b)};
      EXPECT_EQ(t.tuple_colors[0][tuple_index(x, 6)], t.tuple_colors[1][tuple_index(y, 6)]);
    }
  }
}

TEST(Kwl, BudgetIsEnforced) {
  EXPECT_THROW(kwl_refine(cycle_graph(8), 3), BudgetExceeded);
  EXPECT_THROW(kwl_refine(cycle_graph(11), 2), BudgetExceeded);
  KwlBudget wide;
  wide.max_nodes_k2 = 11;
  EXPECT_NO_THROW(kwl_refine(cycle_graph(11), 2, wide));
}

TEST(Kwl, PoolingKeepsGraphEquality) {
  Rng rng(12);
  for (int t = 0; t < 15; ++t) {
    const Graph a = erdos_renyi(5, 0.5, false, rng);
    const Graph b = t % 2 ? apply_permutation(a, Permutation::random(5, rng)) : erdos_renyi(5, 0.5, false, rng);
    const std::vector<Graph> pair{a, b};
    const PooledColoring pc = kwl_l_pooling_joint(pair, 3, 1);
    EXPECT_EQ(pc.graph_colors[0] == pc.graph_colors[1], graph_colors_equal(a, b, 3));
  }
}

TEST(Kwl, KlWlSeparatesOrientedPathEnds) {
  const Graph p = path_graph(4);
  const std::vector<NodeId> end_mid{0, 1};
  const std::vector<NodeId> mid_end{1, 0};
  const std::vector<NodeId> other_end{3, 2};
  EXPECT_FALSE(kl_wl_tuples_equal(p, end_mid, p, mid_end, 2));
  EXPECT_TRUE(kl_wl_tuples_equal(p, end_mid, p, other_end, 2));
}

}  // namespace
}  // namespace labelkit
