#include "labelkit/predictor.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "labelkit/detail/parallel.hpp"
#include "labelkit/errors.hpp"
#include "labelkit/generators.hpp"
#include "labelkit/labeling.hpp"
#include "labelkit/random.hpp"
#include "labelkit/structure.hpp"

namespace labelkit {

namespace {

constexpr std::array kVariants{Variant::no, Variant::zo, Variant::drnl, Variant::de,
                               Variant::de_plus, Variant::zo_s, Variant::zo_os};

void add_histogram(FeatureVector& f, const Coloring& c) {
  for (const auto& round : c.rounds)
    for (int color : round) f.counts[color] += 1.0;
}

double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

/// log(1 + exp(-y' z)) with y' in {-1, +1}, stable for large |z|.
double logistic_loss(double z, int y) {
  const double m = y == 1 ? z : -z;
  return m > 0 ? std::log1p(std::exp(-m)) : -m + std::log1p(std::exp(m));
}

}  // namespace

std::span<const Variant> all_variants() { return kVariants; }

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::no: return "no";
    case Variant::zo: return "zo";
    case Variant::drnl: return "drnl";
    case Variant::de: return "de";
    case Variant::de_plus: return "de_plus";
    case Variant::zo_s: return "zo_s";
    case Variant::zo_os: return "zo_os";
  }
  return "?";
}

Variant parse_variant(std::string_view name) {
  for (Variant v : kVariants)
    if (variant_name(v) == name) return v;
  std::string valid;
  for (Variant v : kVariants) valid += (valid.empty() ? "" : ", ") + std::string(variant_name(v));
  throw InvalidArgument("unknown labeling '" + std::string(name) + "'; valid: " + valid);
}

FeatureVector extract_features(const Graph& g, NodeId u, NodeId v, Variant variant, int hops, int depth,
                               ColorTable& table) {
  if (u < 0 || v < 0 || u >= g.size() || v >= g.size()) throw InvalidArgument("pair node outside graph");
  if (u == v) throw InvalidArgument("pair needs two distinct nodes");
  if (hops < 0 || depth < 0) throw InvalidArgument("hops and depth must be nonnegative");
  const EnclosingSubgraph sub = enclosing_subgraph(g, NodePoset::set({u, v}), hops);
  auto local = [&](NodeId x) {
    return static_cast<NodeId>(std::lower_bound(sub.nodes.begin(), sub.nodes.end(), x) - sub.nodes.begin());
  };
  const NodeId a = local(u), b = local(v);
  const Graph h = sub.graph.without_edge(a, b).without_edge(b, a);
  const NodePoset pair = NodePoset::set({a, b});

  FeatureVector f;
  auto run = [&](const NodeLabeling* l) { add_histogram(f, wl_refine_shared(table, h, l, depth)); };
  switch (variant) {
    case Variant::no: run(nullptr); break;
    case Variant::zo: { const NodeLabeling l = zero_one(pair, h); run(&l); break; }
    case Variant::drnl: { const NodeLabeling l = drnl(pair, h); run(&l); break; }
    case Variant::de: { const NodeLabeling l = distance_encoding(pair, h); run(&l); break; }
    case Variant::de_plus: { const NodeLabeling l = de_plus(pair, h); run(&l); break; }
    case Variant::zo_s:
      for (NodeId head : {a, b}) {
        const NodeLabeling l = subset_zero_one(std::array{head}, h);
        run(&l);
      }
      break;
    case Variant::zo_os: {
      const NodeLabeling l = one_head_label(pair, h, SubsetPolicy::max_degree());
      run(&l);
      break;
    }
  }
  return f;
}

void Vocabulary::add(const FeatureVector& f) {
  for (const auto& [color, count] : f.counts) column_.try_emplace(color, static_cast<int>(column_.size()));
}

SparseVector Vocabulary::transform(const FeatureVector& f) const {
  SparseVector out;
  for (const auto& [color, count] : f.counts) {
    const auto it = column_.find(color);
    if (it != column_.end()) out.emplace_back(it->second, std::log1p(count));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------------------- dataset

std::vector<std::size_t> LinkDataset::indices(Split s) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < examples.size(); ++i)
    if (examples[i].split == s) out.push_back(i);
  return out;
}

LinkDataset make_link_dataset(const Graph& g, std::uint64_t seed, SplitRatios ratios) {
  if (g.directed()) throw InvalidArgument("link prediction expects an undirected graph");
  if (ratios.train <= 0 || ratios.valid < 0 || ratios.test <= 0) throw InvalidArgument("split ratios must be positive");
  std::vector<NodePair> pos;
  for (const Edge& e : g.edges()) pos.push_back({std::min(e.from, e.to), std::max(e.from, e.to)});
  std::sort(pos.begin(), pos.end());
  pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
  if (pos.size() < 3) throw InvalidArgument("link prediction needs at least 3 edges");
  const std::size_t n = static_cast<std::size_t>(g.size());
  const std::size_t non_edges = n * (n - 1) / 2 - pos.size();
  if (non_edges < pos.size()) throw InvalidArgument("graph too dense to sample 1:1 negatives");

  Rng rng(seed);
  shuffle(pos, rng);
  const double total = ratios.train + ratios.valid + ratios.test;
  const std::size_t m = pos.size();
  std::size_t n_test = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(m * ratios.test / total)));
  std::size_t n_valid = static_cast<std::size_t>(std::llround(m * ratios.valid / total));
  if (n_test + n_valid >= m) throw InvalidArgument("split leaves no training edges");

  LinkDataset d;
  d.graph = g;
  d.seed = seed;
  d.observed = g;
  std::set<NodePair> taken(pos.begin(), pos.end());
  auto draw_negative = [&] {
    for (;;) {
      NodeId a = static_cast<NodeId>(uniform_below(rng, n));
      NodeId b = static_cast<NodeId>(uniform_below(rng, n));
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      if (taken.insert({a, b}).second) return NodePair{a, b};
    }
  };
  for (std::size_t i = 0; i < m; ++i) {
    const Split s = i < n_test ? Split::test : i < n_test + n_valid ? Split::valid : Split::train;
    d.examples.push_back({pos[i].first, pos[i].second, 1, s});
    if (s != Split::train) d.observed = d.observed.without_edge(pos[i].first, pos[i].second);
  }
  for (std::size_t i = 0; i < m; ++i) {
    const Split s = d.examples[i].split;
    const NodePair p = draw_negative();
    d.examples.push_back({p.first, p.second, 0, s});
  }
  return d;
}

// ------------------------------------------------------------------- model

double LogisticModel::score(const SparseVector& x) const {
  double z = bias;
  for (const auto& [i, v] : x)
    if (i < static_cast<int>(weights.size())) z += weights[i] * v;
  return z;
}

double logistic_objective(const LogisticModel& m, const std::vector<SparseVector>& xs, const std::vector<int>& ys,
                          double l2) {
  double loss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) loss += logistic_loss(m.score(xs[i]), ys[i]);
  if (!xs.empty()) loss /= static_cast<double>(xs.size());
  double norm = 0.0;
  for (double w : m.weights) norm += w * w;
  return loss + 0.5 * l2 * norm;
}

std::vector<double> logistic_gradient(const LogisticModel& m, const std::vector<SparseVector>& xs,
                                      const std::vector<int>& ys, double l2) {
  std::vector<double> grad(m.weights.size() + 1, 0.0);
  const double scale = xs.empty() ? 0.0 : 1.0 / static_cast<double>(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = (sigmoid(m.score(xs[i])) - ys[i]) * scale;
    for (const auto& [j, v] : xs[i]) grad[j] += r * v;
    grad.back() += r;
  }
  for (std::size_t j = 0; j < m.weights.size(); ++j) grad[j] += l2 * m.weights[j];
  return grad;
}

LogisticModel train_logistic(const std::vector<SparseVector>& xs, const std::vector<int>& ys, int dim,
                             const Hyperparams& hp, std::uint64_t seed, const std::vector<SparseVector>& valid_xs,
                             const std::vector<int>& valid_ys) {
  if (xs.empty()) throw InvalidArgument("training split is empty");
  if (xs.size() != ys.size() || valid_xs.size() != valid_ys.size()) throw InvalidArgument("feature/label size mismatch");
  if (hp.epochs < 0 || hp.batch_size < 1 || hp.rate <= 0 || hp.l2 < 0) throw InvalidArgument("bad hyperparameters");
  LogisticModel m;
  m.weights.assign(static_cast<std::size_t>(dim), 0.0);
  m.hyper = hp;
  const double initial = logistic_objective(m, xs, ys, hp.l2);
  const bool validate = !valid_xs.empty() && std::count(valid_ys.begin(), valid_ys.end(), 1) > 0 &&
                        std::count(valid_ys.begin(), valid_ys.end(), 0) > 0;

  Rng rng(seed);
  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), 0);
  for (int epoch = 0; epoch < hp.epochs; ++epoch) {
    shuffle(order, rng);
    for (std::size_t start = 0; start < order.size(); start += static_cast<std::size_t>(hp.batch_size)) {
      const std::size_t end = std::min(order.size(), start + static_cast<std::size_t>(hp.batch_size));
      const double scale = 1.0 / static_cast<double>(end - start);
      // Weight decay on all weights, data term on the batch's active columns.
      for (double& w : m.weights) w *= 1.0 - hp.rate * hp.l2;
      std::vector<std::pair<double, std::size_t>> residuals;
      for (std::size_t k = start; k < end; ++k) {
        const std::size_t i = order[k];
        residuals.emplace_back((sigmoid(m.score(xs[i])) - ys[i]) * scale, i);
      }
      for (const auto& [r, i] : residuals) {
        for (const auto& [j, v] : xs[i]) m.weights[j] -= hp.rate * r * v;
        m.bias -= hp.rate * r;
      }
    }
    const double loss = logistic_objective(m, xs, ys, hp.l2);
    m.epoch_loss.push_back(loss);
    if (!std::isfinite(loss) || loss > 10.0 * initial) {
      std::ostringstream msg;
      msg << "training diverged at epoch " << epoch + 1 << ": objective " << loss << " against initial " << initial
          << " (rate " << hp.rate << ", l2 " << hp.l2 << ", batch " << hp.batch_size << ")";
      throw TrainingDiverged(msg.str());
    }
    if (validate) {
      std::vector<double> s;
      for (const auto& x : valid_xs) s.push_back(m.score(x));
      m.epoch_valid_auc.push_back(evaluate_auc(s, valid_ys));
    }
  }
  return m;
}

double gradient_check(std::uint64_t seed, double step) {
  Rng rng(seed);
  const int dim = 6;
  std::vector<SparseVector> xs;
  std::vector<int> ys;
  for (int i = 0; i < 12; ++i) {
    SparseVector x;
    for (int j = 0; j < dim; ++j)
      if (uniform_unit(rng) < 0.6) x.emplace_back(j, standard_normal(rng));
    xs.push_back(std::move(x));
    ys.push_back(uniform_unit(rng) < 0.5 ? 1 : 0);
  }
  LogisticModel m;
  for (int j = 0; j < dim; ++j) m.weights.push_back(standard_normal(rng));
  m.bias = standard_normal(rng);
  const double l2 = 0.1;
  const std::vector<double> grad = logistic_gradient(m, xs, ys, l2);
  double worst = 0.0;
  for (int j = 0; j <= dim; ++j) {
    double& param = j < dim ? m.weights[j] : m.bias;
    const double saved = param;
    param = saved + step;
    const double up = logistic_objective(m, xs, ys, l2);
    param = saved - step;
    const double down = logistic_objective(m, xs, ys, l2);
    param = saved;
    const double numeric = (up - down) / (2 * step);
    const double denom = std::max({std::abs(numeric), std::abs(grad[j]), 1e-8});
    worst = std::max(worst, std::abs(numeric - grad[j]) / denom);
  }
  return worst;
}

double evaluate_auc(const std::vector<double>& scores, const std::vector<int>& labels) {
  if (scores.size() != labels.size()) throw InvalidArgument("scores and labels differ in length");
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  double pos_rank_sum = 0.0;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && scores[order[j]] == scores[order[i]]) ++j;
    const double mid_rank = 0.5 * static_cast<double>(i + 1 + j);  // average of ranks i+1..j
    for (std::size_t k = i; k < j; ++k) {
      if (labels[order[k]] == 1) {
        pos_rank_sum += mid_rank;
        ++pos;
      }
    }
    i = j;
  }
  const std::size_t neg = scores.size() - pos;
  if (pos == 0 || neg == 0) throw InvalidArgument("AUC needs at least one positive and one negative");
  const double p = static_cast<double>(pos);
  return (pos_rank_sum - p * (p + 1) / 2) / (p * static_cast<double>(neg));
}

// ------------------------------------------------------------------ pipeline

namespace {

struct Trained {
  LinkDataset data;
  Vocabulary vocab;
  ColorTable table;
  LogisticModel model;
  std::vector<SparseVector> valid_x, test_x;
  std::vector<int> valid_y, test_y;
};

void train_cell(Trained& t, const Graph& g, Variant variant, std::uint64_t seed, const PredictorConfig& cfg) {
  t.data = make_link_dataset(g, seed, cfg.ratios);
  auto features = [&](Split s, std::vector<SparseVector>* xs, std::vector<int>* ys, bool grow) {
    std::vector<FeatureVector> raw;
    for (std::size_t i : t.data.indices(s)) {
      const LinkExample& e = t.data.examples[i];
      raw.push_back(extract_features(t.data.observed, e.u, e.v, variant, cfg.hops, cfg.depth, t.table));
      ys->push_back(e.label);
    }
    if (grow)
      for (const auto& f : raw) t.vocab.add(f);
    for (const auto& f : raw) xs->push_back(t.vocab.transform(f));
  };
  std::vector<SparseVector> train_x;
  std::vector<int> train_y;
  features(Split::train, &train_x, &train_y, true);
  features(Split::valid, &t.valid_x, &t.valid_y, false);
  features(Split::test, &t.test_x, &t.test_y, false);
  t.model = train_logistic(train_x, train_y, t.vocab.size(), cfg.hyper, seed, t.valid_x, t.valid_y);
}

double split_auc(const LogisticModel& m, const std::vector<SparseVector>& xs, const std::vector<int>& ys) {
  std::vector<double> s;
  for (const auto& x : xs) s.push_back(m.score(x));
  return evaluate_auc(s, ys);
}

}  // namespace

PredictorRun run_predictor(const Graph& g, Variant variant, std::uint64_t seed, const PredictorConfig& cfg) {
  Trained t;
  train_cell(t, g, variant, seed, cfg);
  PredictorRun r;
  r.variant = variant;
  r.seed = seed;
  r.vocabulary = t.vocab.size();
  const bool has_valid = std::count(t.valid_y.begin(), t.valid_y.end(), 1) > 0;
  r.valid_auc = has_valid ? split_auc(t.model, t.valid_x, t.valid_y) : std::nan("");
  r.test_auc = split_auc(t.model, t.test_x, t.test_y);
  r.model = std::move(t.model);
  return r;
}

std::vector<double> predict_pairs(const Graph& g, Variant variant, std::uint64_t seed, const PredictorConfig& cfg,
                                  const std::vector<NodePair>& pairs) {
  Trained t;
  train_cell(t, g, variant, seed, cfg);
  std::vector<double> out;
  for (const auto& [u, v] : pairs) {
    const FeatureVector f = extract_features(t.data.observed, u, v, variant, cfg.hops, cfg.depth, t.table);
    out.push_back(sigmoid(t.model.score(t.vocab.transform(f))));
  }
  return out;
}

const BenchmarkRow& BenchmarkReport::row(std::string_view variant) const {
  for (const auto& r : rows)
    if (r.variant == variant) return r;
  throw InvalidArgument("no benchmark row for '" + std::string(variant) + "'");
}

std::string BenchmarkReport::to_csv() const {
  std::ostringstream out;
  out.precision(6);
  out << std::fixed;
  out << "variant,mean_auc,std";
  for (auto s : seeds) out << ",seed_" << s;
  out << "\n";
  for (const auto& r : rows) {
    out << r.variant << "," << r.mean << "," << r.std;
    for (double a : r.test_auc) out << "," << a;
    out << "\n";
  }
  return out.str();
}

nlohmann::json BenchmarkReport::manifest() const {
  nlohmann::json rows_json = nlohmann::json::array();
  for (const auto& r : rows) {
    rows_json.push_back({{"variant", r.variant}, {"mean_auc", r.mean}, {"std", r.std}, {"test_auc", r.test_auc}});
  }
  return {{"graph", {{"name", graph_name}, {"nodes", nodes}, {"edges", edges}}},
          {"hops", config.hops},
          {"depth", config.depth},
          {"rate", config.hyper.rate},
          {"l2", config.hyper.l2},
          {"epochs", config.hyper.epochs},
          {"batch_size", config.hyper.batch_size},
          {"split", {config.ratios.train, config.ratios.valid, config.ratios.test}},
          {"negatives_per_positive", 1},
          {"seeds", seeds},
          {"results", rows_json}};
}

BenchmarkReport benchmark(const Graph& g, const std::string& graph_name, const std::vector<Variant>& variants,
                          const std::vector<std::uint64_t>& seeds, const PredictorConfig& cfg) {
  if (variants.empty() || seeds.empty()) throw InvalidArgument("benchmark needs at least one labeling and one seed");
  BenchmarkReport rep;
  rep.config = cfg;
  rep.seeds = seeds;
  rep.graph_name = graph_name;
  rep.nodes = g.size();
  rep.edges = g.edges().size();
  const std::size_t cells = variants.size() * seeds.size();
  std::vector<double> auc(cells);
  detail::parallel_for(cells, [&](std::size_t c) {
    auc[c] = run_predictor(g, variants[c / seeds.size()], seeds[c % seeds.size()], cfg).test_auc;
  });
  for (std::size_t v = 0; v < variants.size(); ++v) {
    BenchmarkRow row;
    row.variant = std::string(variant_name(variants[v]));
    row.test_auc.assign(auc.begin() + v * seeds.size(), auc.begin() + (v + 1) * seeds.size());
    row.mean = std::accumulate(row.test_auc.begin(), row.test_auc.end(), 0.0) / row.test_auc.size();
    double ss = 0.0;
    for (double a : row.test_auc) ss += (a - row.mean) * (a - row.mean);
    row.std = row.test_auc.size() > 1 ? std::sqrt(ss / (row.test_auc.size() - 1)) : 0.0;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

Graph synthetic_benchmark_graph(std::uint64_t seed) {
  Rng rng(seed);
  return watts_strogatz(300, 6, 0.1, rng);
}

}  // namespace labelkit
