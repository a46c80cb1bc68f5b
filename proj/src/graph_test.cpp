#include "labelkit/graph.hpp"

#include <gtest/gtest.h>

#include "labelkit/errors.hpp"
#include "labelkit/generators.hpp"

namespace labelkit {
namespace {

TEST(Permutation, ComposeAndInverse) {
  Rng rng(3);
  const Permutation p = Permutation::random(7, rng);
  const Permutation q = Permutation::random(7, rng);
  EXPECT_EQ(compose(p, p.inverse()), Permutation::identity(7));
  const Permutation pq = compose(p, q);
  for (int i = 0; i < 7; ++i) EXPECT_EQ(pq(i), p(q(i)));
}

TEST(Permutation, RejectsNonBijection) { EXPECT_THROW(Permutation({0, 0, 1}), InvalidArgument); }

TEST(Graph, UndirectedEdgesCollapse) {
  const std::vector<NodePair> pairs{{0, 1}, {1, 0}, {1, 2}};
  const Graph g = Graph::from_pairs(3, false, pairs);
  EXPECT_EQ(g.num_arcs(), 4u);
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_EQ(g.edges().size(), 2u);
  EXPECT_EQ(g.degree(1), 2);
}

TEST(Graph, RejectsSelfLoopsAndBadIds) {
  const std::vector<NodePair> loop{{1, 1}};
  EXPECT_THROW(Graph::from_pairs(3, false, loop), Error);
  const std::vector<NodePair> out{{0, 5}};
  EXPECT_THROW(Graph::from_pairs(3, false, out), Error);
}

TEST(Graph, RejectsConflictingDuplicateFeatures) {
  std::vector<Edge> edges{{0, 1, {Fixed::from_int(1)}}, {1, 0, {Fixed::from_int(2)}}};
  EXPECT_THROW(Graph(2, false, edges), Error);
}

TEST(Graph, DirectedNeighborhoods) {
  const std::vector<NodePair> pairs{{0, 1}, {2, 1}};
  const Graph g = Graph::from_pairs(3, true, pairs);
  EXPECT_EQ(g.out_neighbors(1).size(), 0u);
  EXPECT_EQ(g.in_neighbors(1).size(), 2u);
  EXPECT_EQ(g.degree(1), 2);
  EXPECT_FALSE(g.has_edge(1, 0));
}

TEST(Graph, PermutationMovesEdgesAndFeatures) {
  Rng rng(11);
  Graph g = erdos_renyi(8, 0.4, false, rng);
  std::vector<FeatureVec> feats;
  for (int v = 0; v < 8; ++v) feats.push_back({Fixed::from_int(v)});
  g = g.with_node_features(feats);
  const Permutation p = Permutation::random(8, rng);
  const Graph h = apply_permutation(g, p);
  for (NodeId a = 0; a < 8; ++a) {
    EXPECT_EQ(h.node_features(p(a)), g.node_features(a));
    for (NodeId b = 0; b < 8; ++b) EXPECT_EQ(h.has_edge(p(a), p(b)), g.has_edge(a, b));
  }
  EXPECT_EQ(apply_permutation(h, p.inverse()), g);
}

TEST(Graph, InducedAndWithoutEdge) {
  const Graph c = cycle_graph(5);
  const std::vector<NodeId> keep{0, 1, 2};
  const Graph p = c.induced(keep);
  EXPECT_EQ(p.edges().size(), 2u);
  const Graph cut = c.without_edge(0, 1);
  EXPECT_FALSE(cut.has_edge(1, 0));
  EXPECT_EQ(cut.edges().size(), 4u);
}

TEST(NodePoset, ClosureAndAxioms) {
  const NodePoset s = NodePoset::from_order({1, 2, 3}, {{1, 2}, {2, 3}});
  EXPECT_TRUE(s.leq(1, 3));
  EXPECT_TRUE(s.leq(2, 2));
  EXPECT_TRUE(s.is_total());
  EXPECT_FALSE(s.is_set());
  EXPECT_THROW(NodePoset::from_order({1, 2}, {{1, 2}, {2, 1}}), ValidationError);
  // Missing the transitive pair.
  EXPECT_THROW(NodePoset::from_relation({1, 2, 3}, {{1, 1}, {2, 2}, {3, 3}, {1, 2}, {2, 3}}), ValidationError);
}

TEST(NodePoset, SetAndPermute) {
  const NodePoset s = NodePoset::set({4, 1});
  EXPECT_TRUE(s.is_set());
  EXPECT_TRUE(s.contains(4));
  EXPECT_FALSE(s.leq(1, 4));
  const Permutation p({1, 2, 3, 4, 0});
  const NodePoset t = NodePoset::chain({0, 4}).permuted(p);
  EXPECT_TRUE(t.leq(1, 0));
}

TEST(Hypergraph, IncidenceGraphCarriesOriginFlag) {
  const Hypergraph h(3, {{0, 1}, {1, 2}, {0, 1, 2}});
  const Graph inc = incidence_graph(h);
  ASSERT_EQ(inc.size(), 6);
  EXPECT_FALSE(inc.directed());
  EXPECT_EQ(inc.node_features(0).back(), Fixed::from_int(1));
  EXPECT_EQ(inc.node_features(4).back(), Fixed::from_int(0));
  EXPECT_TRUE(inc.has_edge(2, 4));
  EXPECT_FALSE(inc.has_edge(0, 4));
  EXPECT_EQ(inc.edges().size(), 7u);
}

TEST(Hypergraph, RejectsEmptyHyperedge) { EXPECT_THROW(Hypergraph(2, {{}}), Error); }

}  // namespace
}  // namespace labelkit
