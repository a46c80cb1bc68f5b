#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "labelkit/graph.hpp"
#include "labelkit/wl.hpp"

namespace labelkit {

/// Labelings compared by the link predictor.
enum class Variant {
  no,       ///< no labels
  zo,       ///< zero-one on the pair
  drnl,     ///< double-radius node labeling
  de,       ///< distance encoding, capped
  de_plus,  ///< distance encoding with masking, uncapped
  zo_s,     ///< subset(1) zero-one, histograms summed over both heads
  zo_os,    ///< subset(1) zero-one, one head chosen by maximum degree
};

std::span<const Variant> all_variants();
std::string_view variant_name(Variant v);
/// Throws InvalidArgument listing the valid names.
Variant parse_variant(std::string_view name);

/// WL color counts over all rounds; color ids come from the caller's table.
struct FeatureVector {
  std::map<int, double> counts;
  friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
};

/// Histogram of WL colors on the h-hop enclosing subgraph of (u, v) with
/// the edge u-v removed, under the given labeling.
FeatureVector extract_features(const Graph& g, NodeId u, NodeId v, Variant variant, int hops, int depth,
                               ColorTable& table);

using SparseVector = std::vector<std::pair<int, double>>;

/// Color id -> column, built from training histograms only.
class Vocabulary {
 public:
  void add(const FeatureVector& f);
  /// log1p of counts; colors outside the vocabulary are dropped.
  SparseVector transform(const FeatureVector& f) const;
  int size() const { return static_cast<int>(column_.size()); }

 private:
  std::map<int, int> column_;
};

enum class Split { train, valid, test };

struct SplitRatios {
  double train = 0.85;
  double valid = 0.05;
  double test = 0.10;
};

struct LinkExample {
  NodeId u = 0;
  NodeId v = 0;
  int label = 0;  // 1 edge, 0 sampled non-edge
  Split split = Split::train;
};

/// Positive edges split three ways, each split paired 1:1 with uniform
/// non-edges. `observed` is the input graph with valid and test positives
/// removed; features are only ever computed on it.
struct LinkDataset {
  Graph graph;
  Graph observed;
  std::vector<LinkExample> examples;
  std::uint64_t seed = 0;

  std::vector<std::size_t> indices(Split s) const;
};

/// Needs an undirected graph with at least 3 edges and enough non-edges.
LinkDataset make_link_dataset(const Graph& g, std::uint64_t seed, SplitRatios ratios = {});

struct Hyperparams {
  double rate = 0.1;
  double l2 = 1e-4;
  int epochs = 50;
  int batch_size = 32;
};

struct LogisticModel {
  std::vector<double> weights;
  double bias = 0.0;
  Hyperparams hyper;
  std::vector<double> epoch_loss;       // mean training objective after each epoch
  std::vector<double> epoch_valid_auc;  // empty when no validation data was given

  double score(const SparseVector& x) const;
};

/// Mean logistic loss plus (l2 / 2) * |w|^2.
double logistic_objective(const LogisticModel& m, const std::vector<SparseVector>& xs, const std::vector<int>& ys,
                          double l2);
/// Gradient of logistic_objective: weights first, bias last.
std::vector<double> logistic_gradient(const LogisticModel& m, const std::vector<SparseVector>& xs,
                                      const std::vector<int>& ys, double l2);

/// Mini-batch SGD from zero weights. Throws TrainingDiverged when the
/// objective exceeds ten times its initial value or stops being finite.
LogisticModel train_logistic(const std::vector<SparseVector>& xs, const std::vector<int>& ys, int dim,
                             const Hyperparams& hp, std::uint64_t seed,
                             const std::vector<SparseVector>& valid_xs = {}, const std::vector<int>& valid_ys = {});

/// Largest relative error between logistic_gradient and central
/// differences on a random small model.
double gradient_check(std::uint64_t seed, double step = 1e-6);

/// Mann-Whitney AUC; tied scores count one half. Throws InvalidArgument
/// unless both classes are present.
double evaluate_auc(const std::vector<double>& scores, const std::vector<int>& labels);

struct PredictorConfig {
  int hops = 1;
  int depth = 3;
  Hyperparams hyper;
  SplitRatios ratios;
};

/// One trained cell: dataset, vocabulary, model and AUCs.
struct PredictorRun {
  Variant variant = Variant::no;
  std::uint64_t seed = 0;
  int vocabulary = 0;
  double valid_auc = 0.0;
  double test_auc = 0.0;
  LogisticModel model;
};

PredictorRun run_predictor(const Graph& g, Variant variant, std::uint64_t seed, const PredictorConfig& cfg = {});

/// Scores arbitrary pairs with a model trained as in run_predictor.
std::vector<double> predict_pairs(const Graph& g, Variant variant, std::uint64_t seed, const PredictorConfig& cfg,
                                  const std::vector<NodePair>& pairs);

struct BenchmarkRow {
  std::string variant;
  std::vector<double> test_auc;  // per seed, in seed order
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation
};

struct BenchmarkReport {
  PredictorConfig config;
  std::vector<std::uint64_t> seeds;
  std::string graph_name;
  int nodes = 0;
  std::size_t edges = 0;
  std::vector<BenchmarkRow> rows;

  const BenchmarkRow& row(std::string_view variant) const;
  /// variant,mean_auc,std,seed_<s>,... one line per variant.
  std::string to_csv() const;
  /// Every hyperparameter, seed and result.
  nlohmann::json manifest() const;
};

BenchmarkReport benchmark(const Graph& g, const std::string& graph_name, const std::vector<Variant>& variants,
                          const std::vector<std::uint64_t>& seeds, const PredictorConfig& cfg = {});

/// The shipped synthetic graph: small-world, 300 nodes, 6 lattice neighbors,
/// rewiring 0.1.
Graph synthetic_benchmark_graph(std::uint64_t seed = 0);

}  // namespace labelkit
