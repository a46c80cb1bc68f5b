#include "labelkit/labeling.hpp"

#include <gtest/gtest.h>

#include <map>

#include "labelkit/errors.hpp"
#include "labelkit/generators.hpp"
#include "labelkit/isomorphism.hpp"
#include "labelkit/structure.hpp"

namespace labelkit {
namespace {

std::vector<std::int64_t> column(const NodeLabeling& l) {
  std::vector<std::int64_t> out;
  for (NodeId v = 0; v < l.size(); ++v) out.push_back(l[v][0]);
  return out;
}

TEST(ZeroOne, Examples) {
  const Graph c6 = cycle_graph(6);
  EXPECT_EQ(column(zero_one(NodePoset::set({0, 1}), c6)), (std::vector<std::int64_t>{1, 1, 0, 0, 0, 0}));
  EXPECT_EQ(column(zero_one(NodePoset(), c6)), std::vector<std::int64_t>(6, 0));
  EXPECT_EQ(column(zero_one(NodePoset::set({0, 1, 2, 3, 4, 5}), c6)), std::vector<std::int64_t>(6, 1));
  const std::vector<NodeId> p{2};
  EXPECT_EQ(column(subset_zero_one(p, c6)), (std::vector<std::int64_t>{0, 0, 1, 0, 0, 0}));
  EXPECT_EQ(column(subset_zero_one({}, c6)), std::vector<std::int64_t>(6, 0));
}

// Radius pairs ranked by increasing sum, then increasing minimum, from 2.
std::map<std::pair<int, int>, std::int64_t> drnl_rank_oracle(int max_sum) {
  std::map<std::pair<int, int>, std::int64_t> out;
  std::int64_t rank = 2;
  for (int d = 2; d <= max_sum; ++d) {
    for (int lo = 1; lo <= d / 2; ++lo) {
      out[{lo, d - lo}] = rank;
      out[{d - lo, lo}] = rank;
      ++rank;
    }
  }
  return out;
}

TEST(Drnl, ClosedFormMatchesRankOracle) {
  const auto oracle = drnl_rank_oracle(20);
  for (const auto& [radii, rank] : oracle) EXPECT_EQ(drnl_label(radii.first, radii.second), rank);
  EXPECT_EQ(drnl_label(1, 1), 2);
  EXPECT_EQ(drnl_label(1, 2), 3);
  EXPECT_EQ(drnl_label(2, 2), 5);
  EXPECT_EQ(drnl_label(3, 4), 13);
}

TEST(Drnl, LabelsOnCycle) {
  const Graph c6 = cycle_graph(6);
  // Node 2 is one hop from 1 and, with 1 masked, four hops from 0.
  EXPECT_EQ(column(drnl(NodePoset::set({0, 1}), c6)), (std::vector<std::int64_t>{1, 1, 6, 7, 7, 6}));
  EXPECT_THROW(drnl(NodePoset::set({0, 1, 2}), c6), Error);
}

TEST(Drnl, UnreachableGetsZero) {
  const Graph g = disjoint_union(path_graph(2), path_graph(2));
  EXPECT_EQ(column(drnl(NodePoset::set({0, 1}), g)), (std::vector<std::int64_t>{1, 1, 0, 0}));
}

// DRNL sends every node with an infinite radius to 0; DE+ keeps the finite
// one. They agree wherever both radii are finite.
TEST(Drnl, MatchesDePlusPartition) {
  Rng rng(31);
  for (int t = 0; t < 200; ++t) {
    const int n = 4 + t % 8;
    const Graph g = erdos_renyi(n, 0.3, false, rng);
    const NodePoset s = NodePoset::set(random_subset(n, 2, rng));
    const NodeLabeling a = drnl(s, g);
    const NodeLabeling b = de_plus(s, g);
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = 0; v < n; ++v) {
        if (b[u] == b[v]) EXPECT_EQ(a[u], a[v]);
        if (a[u][0] != 0 && a[v][0] != 0) EXPECT_EQ(a[u] == a[v], b[u] == b[v]);
      }
    }
  }
}

TEST(DistanceEncoding, Examples) {
  const Graph c6 = cycle_graph(6);
  const NodePoset s = NodePoset::set({0, 3});
  EXPECT_EQ(distance_encoding(s, c6, std::nullopt)[1], (std::vector<std::int64_t>{1, 2}));
  EXPECT_EQ(distance_encoding(s, c6, 1)[1], (std::vector<std::int64_t>{1, 1}));
  EXPECT_EQ(distance_encoding(s, c6)[0], (std::vector<std::int64_t>{0, 3}));
  const Graph split = disjoint_union(path_graph(2), path_graph(1));
  EXPECT_EQ(distance_encoding(NodePoset::set({0}), split)[2], (std::vector<std::int64_t>{4}));
  EXPECT_EQ(distance_encoding(NodePoset::set({0}), split, std::nullopt)[2],
            (std::vector<std::int64_t>{kDistanceInfinity}));
}

TEST(Hasse, Examples) {
  const Graph g = path_graph(4);
  const NodeLabeling anti = hasse_embedding(NodePoset::set({0, 2, 3}), g);
  EXPECT_EQ(anti[0], anti[2]);
  EXPECT_EQ(anti[0], anti[3]);
  EXPECT_NE(anti[0][0], 0);
  EXPECT_EQ(anti[1][0], 0);
  const NodeLabeling link = hasse_embedding(NodePoset::chain({2, 1}), g);
  EXPECT_NE(link[2], link[1]);
  const NodeLabeling chain = hasse_embedding(NodePoset::chain({0, 1, 2}), g);
  EXPECT_NE(chain[0], chain[1]);
  EXPECT_NE(chain[1], chain[2]);
  EXPECT_NE(chain[0], chain[2]);
}

// Equal type ids exactly when (member, Hasse diagram) pairs are isomorphic.
TEST(Hasse, TypeIdMatchesCanonicalCodes) {
  std::vector<std::pair<NodePoset, NodeId>> items;
  for (int k = 1; k <= 4; ++k) {
    std::vector<NodeId> m(k);
    for (int i = 0; i < k; ++i) m[i] = i;
    for (const NodePoset& s : all_posets(m))
      for (NodeId u : s.members()) items.push_back({s, u});
  }
  Rng rng(44);
  for (int t = 0; t < 60; ++t) {
    const NodePoset s = random_poset({0, 1, 2, 3, 4}, 0.4, rng);
    items.push_back({s, static_cast<NodeId>(uniform_below(rng, 5))});
  }
  auto code = [](const NodePoset& s, NodeId u) {
    const auto& m = s.members();
    const NodeId k = static_cast<NodeId>(std::find(m.begin(), m.end(), u) - m.begin());
    return canonical_code(NodePoset::set({k}), hasse_diagram(s));
  };
  std::vector<std::int64_t> ids;
  std::vector<CanonicalCode> codes;
  for (const auto& [s, u] : items) {
    ids.push_back(hasse_type_id(s, u));
    codes.push_back(code(s, u));
  }
  for (std::size_t i = 0; i < items.size(); ++i)
    for (std::size_t j = i + 1; j < items.size(); ++j) ASSERT_EQ(ids[i] == ids[j], codes[i] == codes[j]);
}

TEST(LinearOrder, Examples) {
  const Graph g = path_graph(4);
  EXPECT_EQ(column(linear_order_labels(NodePoset::chain({3}), g)), (std::vector<std::int64_t>{0, 0, 0, 1}));
  EXPECT_EQ(column(linear_order_labels(NodePoset::chain({2, 0, 1}), g)), (std::vector<std::int64_t>{2, 3, 1, 0}));
  EXPECT_THROW(linear_order_labels(NodePoset::set({0, 1}), g), Error);
}

TEST(NearlyLinear, Examples) {
  const Graph g = path_graph(4);
  EXPECT_EQ(column(nearly_linear_order_labels(NodePoset::set({0, 1, 2}), g)), (std::vector<std::int64_t>{1, 1, 1, 0}));
  const NodePoset leader = NodePoset::from_order({0, 1, 2}, {{0, 1}, {0, 2}});
  EXPECT_EQ(column(nearly_linear_order_labels(leader, g)), (std::vector<std::int64_t>{1, 2, 2, 0}));
  const NodePoset chain = NodePoset::chain({3, 1, 2});
  EXPECT_EQ(nearly_linear_order_labels(chain, g), linear_order_labels(chain, g));
  const NodePoset vee = NodePoset::from_order({0, 1, 2}, {{0, 2}});
  EXPECT_THROW(nearly_linear_blocks(vee), ValidationError);
}

TEST(OneHead, Policies) {
  const std::vector<NodePair> arc{{0, 1}};
  const Graph d = Graph::from_pairs(2, true, arc);
  EXPECT_EQ(select_one_head(NodePoset::chain({0, 1}), d, SubsetPolicy::least_element()), 0);
  EXPECT_THROW(select_one_head(NodePoset::set({0, 1}), d, SubsetPolicy::least_element()), ValidationError);
  const Graph star = star_graph(3);
  EXPECT_EQ(select_one_head(NodePoset::set({0, 2}), star, SubsetPolicy::max_degree()), 0);
  const NodePoset s = NodePoset::set({1, 2, 3});
  EXPECT_EQ(select_one_head(s, star, SubsetPolicy::random(5)), select_one_head(s, star, SubsetPolicy::random(5)));
  EXPECT_EQ(column(one_head_label(NodePoset::set({0, 2}), star, SubsetPolicy::max_degree())),
            (std::vector<std::int64_t>{1, 0, 0, 0}));
}

TEST(SubsetPooling, Examples) {
  const Graph c6 = cycle_graph(6);
  const NodePoset link = NodePoset::set({0, 1});
  const NodePoset gap = NodePoset::set({0, 2});
  EXPECT_TRUE(subset_pooling_distinguishes(c6, link, c6, gap, 1, PoolingEngine::exact()));
  EXPECT_FALSE(subset_pooling_distinguishes(c6, link, c6, NodePoset::set({3, 4}), 1, PoolingEngine::exact()));
  Rng rng(3);
  for (int t = 0; t < 30; ++t) {
    const Graph g = erdos_renyi(6, 0.4, false, rng);
    const NodePoset a = NodePoset::set(random_subset(6, 3, rng));
    const NodePoset b = NodePoset::set(random_subset(6, 3, rng));
    EXPECT_EQ(subset_pooling_distinguishes(g, a, g, b, 3, PoolingEngine::exact()),
              set_labeling_distinguishes(g, a, g, b, PoolingEngine::exact()));
  }
}

TEST(SubsetPooling, CycleVersusTrianglesReadouts) {
  const Graph c6 = cycle_graph(6);
  const Graph tt = disjoint_union(complete_graph(3), complete_graph(3));
  const NodePoset all = NodePoset::set({0, 1, 2, 3, 4, 5});
  EXPECT_TRUE(subset_pooling_distinguishes(c6, all, tt, all, 1, PoolingEngine::wl(), SubsetReadout::labeled_node));
  EXPECT_FALSE(set_labeling_distinguishes(c6, all, tt, all, PoolingEngine::wl()));
}

TEST(SubsetLabelCache, ReusesLabels) {
  SubsetLabelCache cache;
  const Graph g = cycle_graph(5);
  const NodeLabeling& a = cache.get(0, g, {1});
  const NodeLabeling& b = cache.get(0, g, {1});
  EXPECT_EQ(&a, &b);
  EXPECT_EQ(cache.size(), 1u);
  EXPECT_EQ(cache.hits(), 1u);
}

TEST(Validator, ShippedTricksPass) {
  for (Trick t : all_tricks()) {
    const ValidationReport r = validate_labeling_trick(trick_under_test(t), 60, 6, 7);
    EXPECT_TRUE(r.passed()) << r.trick << ": " << (r.counterexamples.empty() ? "" : r.counterexamples[0]);
    EXPECT_EQ(r.trials, 60);
  }
}

TEST(Validator, CatchesIndexBasedTrick) {
  TrickUnderTest broken;
  broken.name = "smallest index gets 2";
  broken.label = [](const NodePoset& s, const Graph& g) {
    NodeLabeling l = zero_one(s, g);
    if (!s.empty()) l[*std::min_element(s.members().begin(), s.members().end())][0] = 2;
    return l;
  };
  const ValidationReport r = validate_labeling_trick(broken, 200, 6, 1);
  EXPECT_FALSE(r.passed());
  EXPECT_GT(r.equivariance_violations, 0);
  EXPECT_FALSE(r.counterexamples.empty());
}

TEST(Validator, CatchesNonDistinguishingTrick) {
  TrickUnderTest constant;
  constant.name = "all zero";
  constant.label = [](const NodePoset&, const Graph& g) { return NodeLabeling(g.size(), 1); };
  const ValidationReport r = validate_labeling_trick(constant, 200, 6, 1);
  EXPECT_GT(r.distinguishing_violations, 0);
}

TEST(Tricks, NamesRoundTrip) {
  for (Trick t : all_tricks()) EXPECT_EQ(parse_trick(trick_name(t)), t);
  EXPECT_THROW(parse_trick("nope"), InvalidArgument);
}

}  // namespace
}  // namespace labelkit
