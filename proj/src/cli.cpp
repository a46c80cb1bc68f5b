#include "labelkit/cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "labelkit/audit.hpp"
#include "labelkit/errors.hpp"
#include "labelkit/heuristics.hpp"
#include "labelkit/io.hpp"
#include "labelkit/kwl.hpp"
#include "labelkit/labeling.hpp"
#include "labelkit/predictor.hpp"

namespace labelkit {

namespace {

/// Every option of every subcommand; only the active command's fields matter.
struct RunConfig {
  std::string command;
  std::uint64_t seed = 0;
  bool zero_based = false;
  bool allow_empty = false;
  bool directed = false;
  int nodes = 0;
  std::string format = "csv";
  std::string output;

  std::string graph, graph2, hypergraph, hypergraph2;
  std::string trick = "zero_one";
  std::string target, target2;
  int depth = -1;  // converge
  int k = 1;
  int l = 0;
  std::string engine = "wl";
  int subset = 0;
  std::string readout = "targets";
  std::vector<std::string> pairs;

  std::string claim = "all";
  int n_max = 5;
  bool quick = false;
  std::string gallery_check;

  std::string labelings;
  std::string labeling = "zo";
  int seeds = 5;
  int hops = 1;
  int bench_depth = 3;
  int epochs = 50;
  int batch = 32;
  double rate = 0.1;
  double l2 = 1e-4;
  std::string manifest;
};

bool one_based(const RunConfig& c) { return !c.zero_based; }

json config_json(const RunConfig& c) {
  json j{{"zero_based", c.zero_based}, {"format", c.format}};
  const std::string& cmd = c.command;
  auto inputs = [&] {
    if (!c.graph.empty()) j["graph"] = c.graph;
    if (!c.hypergraph.empty()) j["hypergraph"] = c.hypergraph;
    if (c.directed) j["directed"] = true;
    if (c.nodes > 0) j["nodes"] = c.nodes;
  };
  if (cmd == "refine") {
    inputs();
    j["k"] = c.k;
    if (c.l > 0) j["l"] = c.l;
    if (c.k == 1) j["depth"] = c.depth < 0 ? json("converge") : json(c.depth);
    if (!c.target.empty()) {
      j["trick"] = c.trick;
      j["target"] = c.target;
    }
  } else if (cmd == "label") {
    inputs();
    j["trick"] = c.trick;
    j["target"] = c.target;
  } else if (cmd == "distinguish") {
    inputs();
    if (!c.graph2.empty()) j["graph2"] = c.graph2;
    if (!c.hypergraph2.empty()) j["hypergraph2"] = c.hypergraph2;
    j["target1"] = c.target;
    j["target2"] = c.target2;
    j["engine"] = c.engine;
    j["trick"] = c.trick;
    j["subset"] = c.subset;
    j["readout"] = c.readout;
    j["depth"] = c.depth < 0 ? json("converge") : json(c.depth);
  } else if (cmd == "score") {
    inputs();
    j["pairs"] = c.pairs;
  } else if (cmd == "audit") {
    j["claim"] = c.claim;
    j["n_max"] = c.n_max;
    j["quick"] = c.quick;
  } else if (cmd == "gallery") {
    if (!c.gallery_check.empty()) j["check"] = c.gallery_check;
  } else if (cmd == "benchmark" || cmd == "predict") {
    j["graph"] = c.graph.empty() ? json("synthetic") : json(c.graph);
    j["hops"] = c.hops;
    j["depth"] = c.bench_depth;
    j["epochs"] = c.epochs;
    j["batch_size"] = c.batch;
    j["rate"] = c.rate;
    j["l2"] = c.l2;
    if (cmd == "benchmark") {
      j["labelings"] = c.labelings.empty() ? json("all") : json(c.labelings);
      j["seeds"] = c.seeds;
    } else {
      j["labeling"] = c.labeling;
      j["pairs"] = c.pairs;
    }
  }
  return j;
}

json manifest_json(const RunConfig& c) {
  return json{{"version", kVersion}, {"command", c.command}, {"config", config_json(c)}, {"seed", c.seed}};
}

void write_csv_header(std::ostream& out, const RunConfig& c) {
  out << "# labelkit " << kVersion << "\n";
  out << "# command: " << c.command << "\n";
  out << "# config: " << config_json(c).dump() << "\n";
  out << "# seed: " << c.seed << "\n";
}

void emit_json(std::ostream& out, const RunConfig& c, json body) {
  json j{{"manifest", manifest_json(c)}};
  for (auto& [k, v] : body.items()) j[k] = std::move(v);
  out << j.dump(2) << "\n";
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

struct Input {
  Graph graph;
  bool from_hypergraph = false;
  int hyper_nodes = 0;
};

Input load_input(const std::string& graph_path, const std::string& hyper_path, const RunConfig& c, std::ostream& err) {
  Input in;
  if (!hyper_path.empty()) {
    const Hypergraph h = parse_hypergraph_file(hyper_path, one_based(c));
    in.graph = incidence_graph(h);
    in.from_hypergraph = true;
    in.hyper_nodes = h.num_nodes();
    return in;
  }
  if (graph_path.empty()) throw InvalidArgument("an input graph is required (--graph or --hypergraph)");
  EdgeListOptions opts;
  opts.one_based = one_based(c);
  opts.directed = c.directed;
  opts.allow_empty = c.allow_empty;
  opts.n = c.nodes;
  ParsedGraph p = parse_graph_file(graph_path, GraphFormat::automatic, opts);
  for (const auto& w : p.warnings) err << "warning: " << w << "\n";
  in.graph = std::move(p.graph);
  return in;
}

NodePoset load_target(const std::string& text, const Input& in, const RunConfig& c) {
  NodePoset s = parse_target(text, one_based(c));
  const int limit = in.from_hypergraph ? in.hyper_nodes : in.graph.size();
  for (NodeId v : s.members())
    if (v < 0 || v >= limit) throw InvalidArgument("target node " + std::to_string(v + (c.zero_based ? 0 : 1)) + " is outside the graph");
  return s;
}

/// The trick name "none" means no labels.
std::optional<NodeLabeling> labels_for(const std::string& trick, const NodePoset& s, const Graph& g) {
  if (trick == "none") return std::nullopt;
  return apply_trick(parse_trick(trick), s, g);
}

Layers layers_of(const RunConfig& c) { return c.depth < 0 ? Layers::converge() : Layers::fixed(c.depth); }

std::string tuple_text(std::size_t index, int n, int k, bool one) {
  std::vector<int> t(k);
  for (int i = k - 1; i >= 0; --i) {
    t[i] = static_cast<int>(index % n) + (one ? 1 : 0);
    index /= n;
  }
  std::string s;
  for (int i = 0; i < k; ++i) s += (i ? " " : "") + std::to_string(t[i]);
  return s;
}

// --------------------------------------------------------------- commands

int cmd_refine(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Input in = load_input(c.graph, c.hypergraph, c, err);
  const Graph& g = in.graph;
  if (c.k < 1) throw InvalidArgument("--k must be at least 1");
  if (c.k == 1) {
    if (c.l != 0) throw InvalidArgument("--l needs --k >= 2");
    std::optional<NodeLabeling> labels;
    if (!c.target.empty()) labels = labels_for(c.trick, load_target(c.target, in, c), g);
    const Coloring col = wl_refine(g, labels ? &*labels : nullptr, layers_of(c));
    if (c.format == "json") {
      emit_json(out, c, json{{"rounds", col.rounds}, {"converged", col.converged}});
    } else {
      write_csv_header(out, c);
      write_coloring_csv(out, col, one_based(c));
    }
    return kExitOk;
  }
  if (!c.target.empty()) throw InvalidArgument("--target is only used with --k 1");
  if (c.depth >= 0) throw InvalidArgument("k-WL always runs until stable; drop --depth");
  const int n = g.size();
  if (c.l == 0) {
    const TupleColoring tc = kwl_refine(g, c.k);
    if (c.format == "json") {
      emit_json(out, c, json{{"tuple_colors", tc.tuple_colors[0]}, {"graph_color", tc.graph_colors[0]}, {"rounds", tc.rounds}});
    } else {
      write_csv_header(out, c);
      out << "tuple,color\n";
      for (std::size_t i = 0; i < tc.tuple_colors[0].size(); ++i)
        out << tuple_text(i, n, c.k, one_based(c)) << "," << tc.tuple_colors[0][i] << "\n";
    }
    return kExitOk;
  }
  const PooledColoring pc = kwl_l_pooling(g, c.k, c.l);
  if (c.format == "json") {
    emit_json(out, c, json{{"pooled_colors", pc.pooled_colors[0]}, {"graph_color", pc.graph_colors[0]}});
  } else {
    write_csv_header(out, c);
    out << "tuple,color\n";
    for (std::size_t i = 0; i < pc.pooled_colors[0].size(); ++i)
      out << tuple_text(i, n, c.l, one_based(c)) << "," << pc.pooled_colors[0][i] << "\n";
  }
  return kExitOk;
}

int cmd_label(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Input in = load_input(c.graph, c.hypergraph, c, err);
  const NodePoset s = load_target(c.target, in, c);
  const NodeLabeling l = apply_trick(parse_trick(c.trick), s, in.graph);
  if (c.format == "json") {
    std::vector<std::vector<std::int64_t>> rows;
    for (NodeId v = 0; v < l.size(); ++v) rows.emplace_back(l[v].begin(), l[v].end());
    emit_json(out, c, json{{"labels", rows}});
  } else {
    write_csv_header(out, c);
    write_labeling_csv(out, l, one_based(c));
  }
  return kExitOk;
}

int cmd_distinguish(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Input a = load_input(c.graph, c.hypergraph, c, err);
  const bool same = c.graph2.empty() && c.hypergraph2.empty();
  const Input b = same ? a : load_input(c.graph2, c.hypergraph2, c, err);
  const NodePoset s1 = load_target(c.target, a, c);
  const NodePoset s2 = load_target(c.target2, b, c);
  const bool oracle = c.engine == "oracle";
  bool verdict = false;
  if (c.subset > 0) {
    SubsetReadout r = c.readout == "whole_graph"    ? SubsetReadout::whole_graph
                      : c.readout == "labeled_node" ? SubsetReadout::labeled_node
                                                    : SubsetReadout::targets;
    const PoolingEngine e = oracle ? PoolingEngine::exact() : PoolingEngine::wl(layers_of(c));
    verdict = subset_pooling_distinguishes(a.graph, s1, b.graph, s2, c.subset, e, r);
  } else {
    if (c.readout == "labeled_node") throw InvalidArgument("--readout labeled_node needs --subset 1");
    const auto l1 = labels_for(c.trick, s1, a.graph);
    const auto l2 = labels_for(c.trick, s2, b.graph);
    const bool whole = c.readout == "whole_graph";
    if (oracle) {
      if (!l1) {
        verdict = !are_substructures_isomorphic(s1, a.graph, s2, b.graph);
      } else {
        const Graph x = l1->stacked_onto(a.graph);
        const Graph y = l2->stacked_onto(b.graph);
        if (whole) {
          verdict = canonical_code(NodePoset(), x) != canonical_code(NodePoset(), y);
        } else {
          auto codes = [](const NodePoset& s, const Graph& g) {
            std::vector<CanonicalCode> v;
            for (NodeId m : s.members()) v.push_back(canonical_code(NodePoset::set({m}), g));
            std::sort(v.begin(), v.end());
            return v;
          };
          verdict = codes(s1, x) != codes(s2, y);
        }
      }
    } else {
      verdict = wl_distinguishes(a.graph, l1 ? &*l1 : nullptr, s1, b.graph, l2 ? &*l2 : nullptr, s2, layers_of(c),
                                 whole ? Readout::whole_graph : Readout::targets);
    }
  }
  if (c.format == "json") {
    emit_json(out, c, json{{"distinguished", verdict}});
  } else {
    write_csv_header(out, c);
    out << "distinguished\n" << (verdict ? "true" : "false") << "\n";
  }
  return kExitOk;
}

std::vector<NodePair> parse_pairs(const RunConfig& c, int n) {
  std::vector<NodePair> out;
  for (const auto& text : c.pairs) {
    const NodePoset s = parse_target(text, one_based(c));
    if (s.size() != 2 || !s.is_set()) throw InvalidArgument("a pair is two distinct nodes like 1,2; got '" + text + "'");
    for (NodeId v : s.members())
      if (v >= n) throw InvalidArgument("pair node outside the graph in '" + text + "'");
    out.push_back({s.members()[0], s.members()[1]});
  }
  return out;
}

int cmd_score(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Input in = load_input(c.graph, c.hypergraph, c, err);
  const auto pairs = parse_pairs(c, in.graph.size());
  if (pairs.empty()) throw InvalidArgument("score needs at least one --pair");
  const int shift = one_based(c) ? 1 : 0;
  json rows = json::array();
  std::ostringstream csv;
  csv.precision(6);
  csv << std::fixed << "u,v,cn,aa,ra\n";
  for (const auto& [u, v] : pairs) {
    const HeuristicScores s = score_pair(in.graph, u, v);
    rows.push_back(json{{"u", u + shift}, {"v", v + shift}, {"cn", s.cn}, {"aa", s.aa}, {"ra", s.ra}});
    csv << u + shift << "," << v + shift << "," << s.cn << "," << s.aa << "," << s.ra << "\n";
  }
  if (c.format == "json") {
    emit_json(out, c, json{{"scores", rows}});
  } else {
    write_csv_header(out, c);
    out << csv.str();
  }
  return kExitOk;
}

int cmd_audit(const RunConfig& c, std::ostream& out, std::ostream& err) {
  AuditConfig cfg;
  cfg.seed = c.seed;
  cfg.n_max = c.n_max;
  cfg.quick = c.quick;
  const auto results = run_audit(c.claim, cfg);
  json arr = json::array();
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.passed();
    arr.push_back(r.to_json());
    err << r.claim << " " << r.verdict() << " " << r.agreements << "/" << r.instances << "\n";
  }
  emit_json(out, c, json{{"verdict", ok ? "PASS" : "FAIL"}, {"results", arr}});
  return ok ? kExitOk : kExitAuditFailed;
}

int cmd_gallery(const RunConfig& c, std::ostream& out, std::ostream&) {
  if (!c.gallery_check.empty()) {
    const auto items = gallery_from_json(json::parse(read_file(c.gallery_check)));
    emit_json(out, c, json{{"verified", items.size()}});
    return kExitOk;
  }
  out << gallery_to_json(gallery()).dump(2) << "\n";
  return kExitOk;
}

PredictorConfig predictor_config(const RunConfig& c) {
  PredictorConfig p;
  p.hops = c.hops;
  p.depth = c.bench_depth;
  p.hyper.epochs = c.epochs;
  p.hyper.batch_size = c.batch;
  p.hyper.rate = c.rate;
  p.hyper.l2 = c.l2;
  return p;
}

Graph predictor_graph(const RunConfig& c, std::ostream& err, std::string* name) {
  if (c.graph.empty()) {
    *name = "synthetic";
    return synthetic_benchmark_graph(0);
  }
  *name = c.graph;
  return load_input(c.graph, "", c, err).graph;
}

int cmd_benchmark(const RunConfig& c, std::ostream& out, std::ostream& err) {
  std::vector<Variant> variants;
  if (c.labelings.empty()) {
    variants.assign(all_variants().begin(), all_variants().end());
  } else {
    for (const auto& name : split_commas(c.labelings)) variants.push_back(parse_variant(name));
  }
  if (c.seeds < 1) throw InvalidArgument("--seeds must be positive");
  std::vector<std::uint64_t> seeds;
  for (int i = 0; i < c.seeds; ++i) seeds.push_back(c.seed + static_cast<std::uint64_t>(i));
  std::string name;
  const Graph g = predictor_graph(c, err, &name);
  const BenchmarkReport rep = benchmark(g, name, variants, seeds, predictor_config(c));
  json manifest = rep.manifest();
  manifest["version"] = kVersion;
  if (!c.manifest.empty()) {
    std::ofstream m(c.manifest);
    if (!m) throw InvalidArgument("cannot write " + c.manifest);
    m << manifest.dump(2) << "\n";
  }
  if (c.format == "json") {
    emit_json(out, c, json{{"benchmark", manifest}});
  } else {
    write_csv_header(out, c);
    out << rep.to_csv();
  }
  return kExitOk;
}

int cmd_predict(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Variant v = parse_variant(c.labeling);
  std::string name;
  const Graph g = predictor_graph(c, err, &name);
  const auto pairs = parse_pairs(c, g.size());
  const PredictorConfig p = predictor_config(c);
  const PredictorRun run = run_predictor(g, v, c.seed, p);
  const std::vector<double> scores = pairs.empty() ? std::vector<double>{} : predict_pairs(g, v, c.seed, p, pairs);
  const int shift = one_based(c) ? 1 : 0;
  if (c.format == "json") {
    json s = json::array();
    for (std::size_t i = 0; i < pairs.size(); ++i)
      s.push_back(json{{"u", pairs[i].first + shift}, {"v", pairs[i].second + shift}, {"score", scores[i]}});
    emit_json(out, c, json{{"valid_auc", run.valid_auc}, {"test_auc", run.test_auc}, {"vocabulary", run.vocabulary},
                           {"epoch_valid_auc", run.model.epoch_valid_auc}, {"scores", s}});
    return kExitOk;
  }
  write_csv_header(out, c);
  std::ostringstream csv;
  csv.precision(6);
  csv << std::fixed;
  if (pairs.empty()) {
    csv << "split,auc\nvalid," << run.valid_auc << "\ntest," << run.test_auc << "\n";
  } else {
    csv << "u,v,score\n";
    for (std::size_t i = 0; i < pairs.size(); ++i)
      csv << pairs[i].first + shift << "," << pairs[i].second + shift << "," << scores[i] << "\n";
  }
  out << csv.str();
  return kExitOk;
}

/// Checks that need no input files, so bad configs fail before any work.
void validate(const RunConfig& c) {
  if (c.format != "csv" && c.format != "json") throw InvalidArgument("--format must be csv or json");
  if (c.command == "refine" || c.command == "label" || c.command == "distinguish") {
    if (c.trick != "none" || c.command == "label") parse_trick(c.trick);
  }
  if (c.command == "label" && c.target.empty()) throw InvalidArgument("label needs --set or --poset");
  if (c.command == "distinguish") {
    if (c.target.empty() || c.target2.empty()) throw InvalidArgument("distinguish needs --target1 and --target2");
    if (c.engine != "wl" && c.engine != "oracle") throw InvalidArgument("--engine must be wl or oracle");
    if (c.readout != "targets" && c.readout != "whole_graph" && c.readout != "labeled_node")
      throw InvalidArgument("--readout must be targets, whole_graph or labeled_node");
    if (c.subset < 0) throw InvalidArgument("--subset must be nonnegative");
  }
  if (c.command == "benchmark") {
    for (const auto& name : split_commas(c.labelings)) parse_variant(name);
  }
  if (c.command == "predict") parse_variant(c.labeling);
  if (c.command == "audit") {
    const auto claims = audit_claims();
    if (c.claim != "all" && std::find(claims.begin(), claims.end(), c.claim) == claims.end()) {
      std::string names;
      for (const auto& n : claims) names += n + ", ";
      throw InvalidArgument("unknown claim '" + c.claim + "'; valid: " + names + "all");
    }
  }
  if ((c.command == "benchmark" || c.command == "predict") && (c.hops < 0 || c.bench_depth < 0 || c.epochs < 0))
    throw InvalidArgument("--h, --depth and --epochs must be nonnegative");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Labeling tricks, WL refinement and substructure isomorphism at desk scale", "labelkit"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.add_option("--seed", c.seed, "Seed for every random choice");
  app.add_flag("--zero-based", c.zero_based, "Node ids in inputs and outputs start at 0");
  app.add_flag("--allow-empty", c.allow_empty, "Accept an empty edge list as a 0-node graph");
  app.add_flag("--directed", c.directed, "Read edge lists as directed");
  app.add_option("--nodes", c.nodes, "Node count for edge lists (isolated nodes at the end)");
  app.add_option("--format", c.format, "Report format: csv or json");
  app.add_option("-o,--output", c.output, "Write the report here instead of stdout");

  auto graph_opts = [&](CLI::App* s) {
    s->add_option("--graph", c.graph, "Edge list or JSON graph");
    s->add_option("--hypergraph", c.hypergraph, "JSON hypergraph, used through its incidence graph");
  };
  auto* refine = app.add_subcommand("refine", "1-WL colors per round, or k-WL tuple colors");
  graph_opts(refine);
  refine->add_option("--trick", c.trick, "Labeling applied to --target before refining");
  refine->add_option("--target", c.target, "Set '1,2' or poset '1<2'");
  refine->add_option("--depth", c.depth, "Rounds; omitted means until stable");
  refine->add_option("--k", c.k, "Tuple size; 2 or 3 run k-WL");
  refine->add_option("--l", c.l, "Pool k-WL colors onto l-tuples");

  auto* label = app.add_subcommand("label", "Labels a target with one labeling trick");
  graph_opts(label);
  label->add_option("--trick", c.trick, "Labeling trick")->required();
  label->add_option("--set,--poset,--target", c.target, "Set '1,2' or poset '1<2,2<3'");

  auto* dist = app.add_subcommand("distinguish", "Whether an engine separates two targets");
  graph_opts(dist);
  dist->add_option("--graph2", c.graph2, "Second graph (default: the first)");
  dist->add_option("--hypergraph2", c.hypergraph2, "Second hypergraph");
  dist->add_option("--target1", c.target, "First target")->required();
  dist->add_option("--target2", c.target2, "Second target")->required();
  dist->add_option("--engine", c.engine, "wl or oracle");
  dist->add_option("--trick", c.trick, "Labeling trick, or none");
  dist->add_option("--subset", c.subset, "Subset size k for subset(k) pooling; 0 uses set labeling");
  dist->add_option("--readout", c.readout, "targets, whole_graph or labeled_node");
  dist->add_option("--depth", c.depth, "WL rounds; omitted means until stable");

  auto* score = app.add_subcommand("score", "Common neighbors, Adamic-Adar and resource allocation");
  graph_opts(score);
  score->add_option("--pair", c.pairs, "Node pair like 1,2 (repeatable)");

  auto* audit = app.add_subcommand("audit", "Runs the claim audits");
  audit->add_option("--claim", c.claim, "Claim name or all");
  audit->add_option("--n-max", c.n_max, "Largest enumerated graph size");
  audit->add_flag("--quick", c.quick, "Smaller sample counts");

  auto* gal = app.add_subcommand("gallery", "Prints the verified counterexample gallery");
  gal->add_option("--check", c.gallery_check, "Re-verify a stored gallery file");

  auto bench_opts = [&](CLI::App* s) {
    s->set_help_flag("--help", "Print this help message and exit");
    s->add_option("--graph", c.graph, "Edge list (default: synthetic small-world graph)");
    s->add_option("--h", c.hops, "Enclosing subgraph hops");
    s->add_option("--depth", c.bench_depth, "WL rounds");
    s->add_option("--epochs", c.epochs, "SGD epochs");
    s->add_option("--batch", c.batch, "Mini-batch size");
    s->add_option("--rate", c.rate, "Learning rate");
    s->add_option("--l2", c.l2, "L2 penalty");
  };
  auto* bench = app.add_subcommand("benchmark", "Link prediction AUC per labeling and seed");
  bench_opts(bench);
  bench->add_option("--labelings", c.labelings, "Comma list of no, zo, drnl, de, de_plus, zo_s, zo_os");
  bench->add_option("--seeds", c.seeds, "Number of seeds, starting at --seed");
  bench->add_option("--manifest", c.manifest, "Also write the JSON run manifest here");

  auto* pred = app.add_subcommand("predict", "Trains one predictor; reports AUC or scores pairs");
  bench_opts(pred);
  pred->add_option("--labeling", c.labeling, "Labeling variant");
  pred->add_option("--pair", c.pairs, "Pair to score (repeatable)");

  for (auto* s : app.get_subcommands({})) s->fallthrough();

  if (!args.empty() && !args[0].empty() && args[0][0] != '-') {
    bool known = false;
    for (auto* s : app.get_subcommands({})) known = known || s->get_name() == args[0];
    if (!known) {
      err << "error: unknown subcommand '" << args[0] << "'\n" << app.help();
      return kExitUsage;
    }
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  c.command = app.get_subcommands().front()->get_name();
  std::ofstream file;
  std::ostream* sink = &out;
  try {
    validate(c);
    if (!c.output.empty()) {
      file.open(c.output);
      if (!file) throw InvalidArgument("cannot write " + c.output);
      sink = &file;
    }
    if (c.command == "refine") return cmd_refine(c, *sink, err);
    if (c.command == "label") return cmd_label(c, *sink, err);
    if (c.command == "distinguish") return cmd_distinguish(c, *sink, err);
    if (c.command == "score") return cmd_score(c, *sink, err);
    if (c.command == "audit") return cmd_audit(c, *sink, err);
    if (c.command == "gallery") return cmd_gallery(c, *sink, err);
    if (c.command == "benchmark") return cmd_benchmark(c, *sink, err);
    if (c.command == "predict") return cmd_predict(c, *sink, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace labelkit
