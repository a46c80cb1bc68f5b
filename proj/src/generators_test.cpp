#include "labelkit/generators.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace labelkit {
namespace {

TEST(Generators, Basics) {
  EXPECT_EQ(path_graph(4).edges().size(), 3u);
  EXPECT_EQ(cycle_graph(6).edges().size(), 6u);
  EXPECT_EQ(complete_graph(5).edges().size(), 10u);
  EXPECT_EQ(star_graph(4).degree(0), 4);
  const Graph u = disjoint_union(complete_graph(3), complete_graph(3));
  EXPECT_EQ(u.size(), 6);
  EXPECT_TRUE(u.has_edge(3, 5));
  EXPECT_FALSE(is_connected(u));
}

TEST(Generators, EnumerationCounts) {
  // Known counts of unlabeled graphs.
  const std::vector<std::size_t> all{1, 2, 4, 11, 34, 156};
  const std::vector<std::size_t> connected{1, 1, 2, 6, 21, 112};
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(enumerate_graphs(n).size(), all[n - 1]) << n;
    EXPECT_EQ(enumerate_graphs(n, false, true).size(), connected[n - 1]) << n;
  }
  const std::vector<std::size_t> digraphs{1, 3, 16, 218};
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(enumerate_graphs(n, true).size(), digraphs[n - 1]) << n;
}

TEST(Generators, PosetCounts) {
  const std::vector<std::size_t> labeled{1, 1, 3, 19, 219};
  for (int k = 0; k <= 4; ++k) {
    std::vector<NodeId> m(k);
    for (int i = 0; i < k; ++i) m[i] = 10 + i;
    EXPECT_EQ(all_posets(m).size(), labeled[k]) << k;
  }
}

TEST(Generators, BoundedDegreeRespectsBound) {
  Rng rng(4);
  const Graph g = random_bounded_degree(200, 3, rng);
  int isolated = 0;
  for (NodeId v = 0; v < g.size(); ++v) {
    EXPECT_LE(g.degree(v), 3);
    isolated += g.degree(v) == 0;
  }
  EXPECT_EQ(isolated, 0);
}

TEST(Generators, RegularAndSmallWorld) {
  Rng rng(8);
  const Graph r = random_regular(20, 3, rng);
  for (NodeId v = 0; v < 20; ++v) EXPECT_EQ(r.degree(v), 3);
  const Graph w = watts_strogatz(300, 6, 0.1, rng);
  EXPECT_EQ(w.edges().size(), 900u);
}

TEST(Generators, SeededDeterminism) {
  Rng a(17), b(17);
  EXPECT_EQ(erdos_renyi(30, 0.2, false, a), erdos_renyi(30, 0.2, false, b));
  Rng c(17), d(17);
  EXPECT_EQ(random_poset({1, 2, 3, 4}, 0.5, c), random_poset({1, 2, 3, 4}, 0.5, d));
}

TEST(Generators, RandomSubsetIsDistinct) {
  Rng rng(2);
  auto s = random_subset(10, 4, rng);
  std::sort(s.begin(), s.end());
  EXPECT_EQ(std::unique(s.begin(), s.end()), s.end());
  EXPECT_EQ(s.size(), 4u);
}

}  // namespace
}  // namespace labelkit
