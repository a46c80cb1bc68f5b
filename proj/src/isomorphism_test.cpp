#include "labelkit/isomorphism.hpp"

#include <gtest/gtest.h>

#include <set>

#include "labelkit/errors.hpp"
#include "labelkit/generators.hpp"

namespace labelkit {
namespace {

TEST(CanonicalCode, InvariantUnderRelabeling) {
  Rng rng(5);
  for (int t = 0; t < 40; ++t) {
    const int n = 3 + t % 6;
    const Graph g = erdos_renyi(n, 0.45, t % 3 == 0, rng);
    const NodePoset s = NodePoset::set(random_subset(n, 1 + t % 3, rng));
    const Permutation p = Permutation::random(n, rng);
    EXPECT_EQ(canonical_code(s, g), canonical_code(s.permuted(p), apply_permutation(g, p)));
  }
}

TEST(CanonicalCode, SeparatesEnumeratedClasses) {
  for (int n = 1; n <= 5; ++n) {
    std::set<CanonicalCode> codes;
    const auto graphs = enumerate_graphs(n);
    for (const Graph& g : graphs) codes.insert(canonical_code(NodePoset(), g));
    EXPECT_EQ(codes.size(), graphs.size()) << "n=" << n;
  }
}

TEST(CanonicalCode, AgreesWithBacktracking) {
  Rng rng(9);
  for (int t = 0; t < 300; ++t) {
    const int n = 2 + t % 5;
    const Graph a = erdos_renyi(n, 0.5, false, rng);
    const Graph b = t % 2 ? apply_permutation(a, Permutation::random(n, rng)) : erdos_renyi(n, 0.5, false, rng);
    const NodePoset sa = NodePoset::set(random_subset(n, 2, rng));
    const NodePoset sb = NodePoset::set(random_subset(n, 2, rng));
    EXPECT_EQ(canonical_code(sa, a) == canonical_code(sb, b), are_substructures_isomorphic(sa, a, sb, b));
  }
}

TEST(CanonicalCode, PosetRelationMatters) {
  const Graph p = path_graph(3);
  const NodePoset up = NodePoset::chain({0, 1});
  const NodePoset down = NodePoset::chain({1, 0});
  // Path end vs middle: swapping the order is not an automorphism.
  EXPECT_NE(canonical_code(up, p), canonical_code(down, p));
  EXPECT_FALSE(are_substructures_isomorphic(up, p, down, p));
  EXPECT_TRUE(are_substructures_isomorphic(NodePoset::set({0, 1}), p, NodePoset::set({1, 2}), p));
}

TEST(CanonicalCode, RespectsFeatures) {
  const Graph g = path_graph(2);
  const Graph a = g.with_node_features({{Fixed::from_int(1)}, {Fixed::from_int(0)}});
  const Graph b = g.with_node_features({{Fixed::from_int(0)}, {Fixed::from_int(1)}});
  EXPECT_EQ(canonical_code(NodePoset(), a), canonical_code(NodePoset(), b));
  EXPECT_NE(canonical_code(NodePoset::set({0}), a), canonical_code(NodePoset::set({0}), b));
}

TEST(CanonicalCode, RefusesLargeInputs) {
  EXPECT_THROW(canonical_code(NodePoset(), cycle_graph(9)), OracleUnavailable);
  OracleOptions big;
  big.max_nodes = 9;
  EXPECT_NO_THROW(canonical_code(NodePoset(), cycle_graph(9), big));
}

TEST(HypergraphOracle, RelabelingInvariant) {
  const Hypergraph h(4, {{0, 1}, {1, 2, 3}, {3}});
  const Permutation pn({2, 0, 3, 1});
  const Permutation pe({1, 2, 0});
  const NodePoset s = NodePoset::chain({0, 3});
  EXPECT_EQ(hypergraph_canonical_code(s, h), hypergraph_canonical_code(s.permuted(pn), h.permuted(pn, pe)));
  EXPECT_TRUE(are_hypergraph_substructures_isomorphic(s, h, s.permuted(pn), h.permuted(pn, pe)));
  const Hypergraph other(4, {{0, 1}, {1, 2}, {3}});
  EXPECT_FALSE(are_hypergraph_substructures_isomorphic(s, h, s, other));
}

}  // namespace
}  // namespace labelkit
