#include "labelkit/wl.hpp"

#include <gtest/gtest.h>

#include "labelkit/generators.hpp"
#include "labelkit/labeling.hpp"

namespace labelkit {
namespace {

TEST(Wl, RegularGraphStaysOneColor) {
  const Coloring c = wl_refine(cycle_graph(6));
  EXPECT_TRUE(c.converged);
  EXPECT_EQ(c.num_classes(static_cast<int>(c.rounds.size()) - 1), 1);
}

TEST(Wl, PathSplitsByDistanceFromEnds) {
  const Coloring c = wl_refine(path_graph(5));
  const auto& f = c.final_colors();
  EXPECT_EQ(f[0], f[4]);
  EXPECT_EQ(f[1], f[3]);
  EXPECT_NE(f[0], f[1]);
  EXPECT_NE(f[1], f[2]);
}

TEST(Wl, FixedDepthRoundCount) {
  const Coloring c = wl_refine(path_graph(9), nullptr, Layers::fixed(2));
  EXPECT_EQ(c.num_refinements(), 2);
}

TEST(Wl, ColorsArePermutationInvariant) {
  Rng rng(21);
  for (int t = 0; t < 20; ++t) {
    const Graph g = erdos_renyi(12, 0.25, t % 2 == 1, rng);
    const Permutation p = Permutation::random(12, rng);
    const auto a = wl_refine(g).final_colors();
    const auto b = wl_refine(apply_permutation(g, p)).final_colors();
    for (NodeId v = 0; v < 12; ++v) EXPECT_EQ(a[v], b[p(v)]);
  }
}

TEST(Wl, CycleVersusTwoTriangles) {
  const Graph c6 = cycle_graph(6);
  const Graph tt = disjoint_union(complete_graph(3), complete_graph(3));
  const NodePoset all = NodePoset::set({0, 1, 2, 3, 4, 5});
  EXPECT_FALSE(wl_distinguishes(c6, nullptr, all, tt, nullptr, all, Layers::converge(), Readout::whole_graph));
  const NodePoset e = NodePoset::set({0, 1});
  const NodeLabeling l1 = zero_one(e, c6);
  const NodeLabeling l2 = zero_one(e, tt);
  EXPECT_TRUE(wl_distinguishes(c6, &l1, e, tt, &l2, e));
}

TEST(Wl, C6LinkNeedsLabels) {
  const Graph c6 = cycle_graph(6);
  const NodePoset link = NodePoset::set({0, 1});
  const NodePoset gap = NodePoset::set({0, 2});
  EXPECT_FALSE(wl_distinguishes(c6, nullptr, link, c6, nullptr, gap));
  const NodeLabeling a = zero_one(link, c6);
  const NodeLabeling b = zero_one(gap, c6);
  EXPECT_TRUE(wl_distinguishes(c6, &a, link, c6, &b, gap));
}

TEST(Wl, DirectedOrientationSeen) {
  const std::vector<NodePair> arcs{{0, 1}};
  const Graph g = Graph::from_pairs(2, true, arcs);
  const auto f = wl_refine(g).final_colors();
  EXPECT_NE(f[0], f[1]);
}

TEST(Wl, JointRefinementIsComparable) {
  const Graph a = path_graph(4);
  const Graph b = apply_permutation(a, Permutation({3, 1, 0, 2}));
  const std::vector<LabeledGraph> parts{{&a, nullptr}, {&b, nullptr}};
  const auto cols = joint_refine(parts, Layers::converge());
  auto sa = cols[0], sb = cols[1];
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  EXPECT_EQ(sa, sb);
}

TEST(Wl, SharedTableMatchesAcrossCalls) {
  ColorTable table;
  const Graph g = cycle_graph(7);
  const Coloring x = wl_refine_shared(table, g, nullptr, 3);
  const Coloring y = wl_refine_shared(table, apply_permutation(g, Permutation({1, 2, 3, 4, 5, 6, 0})), nullptr, 3);
  EXPECT_EQ(x.final_colors(), y.final_colors());
  // Round 0 and round 3 ids differ even though the partition is the same.
  EXPECT_NE(x.rounds[0][0], x.rounds[3][0]);
}

TEST(Wl, LabelsBreakSymmetry) {
  const Graph g = cycle_graph(5);
  const NodeLabeling l = zero_one(NodePoset::set({0}), g);
  const auto f = wl_refine(g, &l).final_colors();
  EXPECT_EQ(f[1], f[4]);
  EXPECT_EQ(f[2], f[3]);
  EXPECT_NE(f[1], f[2]);
}

}  // namespace
}  // namespace labelkit
