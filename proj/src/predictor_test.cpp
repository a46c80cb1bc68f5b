#include "labelkit/predictor.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "labelkit/errors.hpp"
#include "labelkit/generators.hpp"

namespace labelkit {
namespace {

TEST(Auc, TiesAndPerfectRanking) {
  EXPECT_DOUBLE_EQ(evaluate_auc({0.3, 0.3, 0.3, 0.3}, {1, 0, 1, 0}), 0.5);
  EXPECT_DOUBLE_EQ(evaluate_auc({0.9, 0.8, 0.2, 0.1}, {1, 1, 0, 0}), 1.0);
  EXPECT_DOUBLE_EQ(evaluate_auc({0.1, 0.2, 0.8, 0.9}, {1, 1, 0, 0}), 0.0);
  EXPECT_DOUBLE_EQ(evaluate_auc({0.5, 0.4, 0.5}, {1, 0, 0}), 0.75);
  EXPECT_THROW(evaluate_auc({0.1, 0.2}, {1, 1}), InvalidArgument);
}

TEST(Auc, RandomScorerNearHalf) {
  Rng rng(10);
  std::vector<double> s;
  std::vector<int> y;
  for (int i = 0; i < 20000; ++i) {
    s.push_back(uniform_unit(rng));
    y.push_back(static_cast<int>(uniform_below(rng, 2)));
  }
  EXPECT_NEAR(evaluate_auc(s, y), 0.5, 0.02);
}

TEST(Auc, MonotoneTransformInvariant) {
  Rng rng(2);
  std::vector<double> s, t;
  std::vector<int> y;
  for (int i = 0; i < 500; ++i) {
    const double x = standard_normal(rng);
    s.push_back(x);
    t.push_back(std::exp(3 * x) + 1);
    y.push_back(x + standard_normal(rng) > 0);
  }
  EXPECT_DOUBLE_EQ(evaluate_auc(s, y), evaluate_auc(t, y));
}

TEST(Logistic, GradientCheck) { EXPECT_LT(gradient_check(3), 1e-4); }

TEST(Logistic, ZeroEpochsKeepsInit) {
  const std::vector<SparseVector> xs{{{0, 1.0}}, {{1, 1.0}}};
  const std::vector<int> ys{1, 0};
  Hyperparams hp;
  hp.epochs = 0;
  const LogisticModel m = train_logistic(xs, ys, 2, hp, 1);
  EXPECT_EQ(m.weights, (std::vector<double>{0.0, 0.0}));
  EXPECT_EQ(m.bias, 0.0);
  EXPECT_TRUE(m.epoch_loss.empty());
}

TEST(Logistic, SeparableToyConverges) {
  std::vector<SparseVector> xs;
  std::vector<int> ys;
  for (int i = 0; i < 40; ++i) {
    xs.push_back({{i % 2, 1.0}});
    ys.push_back(i % 2);
  }
  Hyperparams hp;
  hp.rate = 0.5;
  hp.l2 = 0.0;
  hp.epochs = 200;
  hp.batch_size = 8;
  const LogisticModel m = train_logistic(xs, ys, 2, hp, 4);
  EXPECT_LT(m.epoch_loss.back(), 0.1);
  EXPECT_GT(m.score(xs[1]), m.score(xs[0]));
}

TEST(Logistic, DivergenceIsReported) {
  std::vector<SparseVector> xs;
  std::vector<int> ys;
  for (int i = 0; i < 16; ++i) {
    xs.push_back({{0, 1000.0 * (i % 2 ? 1 : -1)}});
    ys.push_back(i % 3 == 0);
  }
  Hyperparams hp;
  hp.rate = 1e6;
  hp.epochs = 5;
  EXPECT_THROW(train_logistic(xs, ys, 1, hp, 1), TrainingDiverged);
}

TEST(Features, CycleLinkAndVariants) {
  const Graph c6 = cycle_graph(6);
  ColorTable t;
  const FeatureVector a = extract_features(c6, 0, 1, Variant::no, 1, 3, t);
  const FeatureVector b = extract_features(c6, 0, 2, Variant::no, 1, 3, t);
  // Link removed: both become paths on the 1-hop ball, 4 vs 3 nodes.
  EXPECT_NE(a, b);
  const FeatureVector za = extract_features(c6, 0, 2, Variant::zo, 1, 3, t);
  const FeatureVector zb = extract_features(c6, 1, 3, Variant::zo, 1, 3, t);
  EXPECT_EQ(za, zb);
  const FeatureVector nb = extract_features(c6, 0, 3, Variant::no, 2, 3, t);
  const FeatureVector nc = extract_features(c6, 0, 3, Variant::zo, 2, 3, t);
  EXPECT_NE(nb, nc);
}

TEST(Features, PermutationInvariant) {
  Rng rng(8);
  const Graph g = erdos_renyi(25, 0.15, false, rng);
  const Permutation p = Permutation::random(25, rng);
  const Graph h = apply_permutation(g, p);
  for (Variant v : all_variants()) {
    ColorTable t;
    for (int k = 0; k < 10; ++k) {
      const NodeId a = static_cast<NodeId>(uniform_below(rng, 25));
      const NodeId b = (a + 1 + static_cast<NodeId>(uniform_below(rng, 24))) % 25;
      EXPECT_EQ(extract_features(g, a, b, v, 1, 3, t), extract_features(h, p(a), p(b), v, 1, 3, t))
          << variant_name(v);
    }
  }
}

TEST(Features, IsolatedPairHasTwoNodes) {
  const Graph g = disjoint_union(path_graph(2), cycle_graph(4));
  ColorTable t;
  const FeatureVector f = extract_features(g, 0, 1, Variant::zo, 1, 2, t);
  double total = 0;
  for (const auto& [color, count] : f.counts) total += count;
  EXPECT_EQ(total, 2.0 * 3);  // two nodes over three rounds
}

TEST(Vocabulary, DropsUnseenAndLogs) {
  Vocabulary voc;
  voc.add(FeatureVector{{{5, 2.0}, {9, 1.0}}});
  EXPECT_EQ(voc.size(), 2);
  const SparseVector x = voc.transform(FeatureVector{{{9, 3.0}, {11, 4.0}}});
  ASSERT_EQ(x.size(), 1u);
  EXPECT_EQ(x[0].first, 1);
  EXPECT_DOUBLE_EQ(x[0].second, std::log1p(3.0));
}

TEST(Dataset, SplitsAreDisjointAndHidden) {
  const Graph g = synthetic_benchmark_graph(0);
  const LinkDataset d = make_link_dataset(g, 3);
  std::set<std::pair<NodeId, NodeId>> seen;
  std::size_t pos[3] = {0, 0, 0}, neg[3] = {0, 0, 0};
  for (const LinkExample& e : d.examples) {
    const auto key = std::minmax(e.u, e.v);
    EXPECT_TRUE(seen.insert(key).second);
    EXPECT_EQ(g.has_edge(e.u, e.v), e.label == 1);
    const int s = static_cast<int>(e.split);
    (e.label ? pos : neg)[s]++;
    if (e.split != Split::train && e.label == 1) EXPECT_FALSE(d.observed.has_edge(e.u, e.v));
    if (e.split == Split::train && e.label == 1) EXPECT_TRUE(d.observed.has_edge(e.u, e.v));
  }
  for (int s = 0; s < 3; ++s) EXPECT_EQ(pos[s], neg[s]);
  EXPECT_EQ(pos[0] + pos[1] + pos[2], g.edges().size());
  EXPECT_EQ(pos[2], 90u);
  EXPECT_EQ(pos[1], 45u);
}

TEST(Dataset, RejectsTinyGraphs) {
  EXPECT_THROW(make_link_dataset(path_graph(3), 1), InvalidArgument);
  const std::vector<NodePair> arcs{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  EXPECT_THROW(make_link_dataset(Graph::from_pairs(6, true, arcs), 1), InvalidArgument);
}

TEST(Predictor, DeterministicAndBeatsChance) {
  Rng rng(1);
  const Graph g = watts_strogatz(120, 6, 0.1, rng);
  PredictorConfig cfg;
  cfg.hyper.epochs = 20;
  const PredictorRun a = run_predictor(g, Variant::zo, 5, cfg);
  const PredictorRun b = run_predictor(g, Variant::zo, 5, cfg);
  EXPECT_EQ(a.test_auc, b.test_auc);
  EXPECT_EQ(a.model.weights, b.model.weights);
  EXPECT_GT(a.test_auc, 0.6);
  EXPECT_EQ(a.model.epoch_valid_auc.size(), 20u);
}

TEST(Predictor, PredictPairsAreProbabilities) {
  Rng rng(1);
  const Graph g = watts_strogatz(80, 4, 0.1, rng);
  PredictorConfig cfg;
  cfg.hyper.epochs = 5;
  const auto p = predict_pairs(g, Variant::drnl, 0, cfg, {{0, 1}, {0, 40}});
  ASSERT_EQ(p.size(), 2u);
  for (double x : p) {
    EXPECT_GT(x, 0.0);
    EXPECT_LT(x, 1.0);
  }
}

TEST(Benchmark, ReportShape) {
  Rng rng(2);
  const Graph g = watts_strogatz(60, 4, 0.1, rng);
  PredictorConfig cfg;
  cfg.hyper.epochs = 3;
  const BenchmarkReport r = benchmark(g, "ws60", {Variant::no, Variant::zo}, {0, 1}, cfg);
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_EQ(r.row("zo").test_auc.size(), 2u);
  const std::string csv = r.to_csv();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "variant,mean_auc,std,seed_0,seed_1");
  EXPECT_EQ(r.manifest().at("seeds"), nlohmann::json({0, 1}));
}

TEST(Variants, NamesRoundTrip) {
  for (Variant v : all_variants()) EXPECT_EQ(parse_variant(variant_name(v)), v);
  EXPECT_THROW(parse_variant("seal"), InvalidArgument);
}

}  // namespace
}  // namespace labelkit
