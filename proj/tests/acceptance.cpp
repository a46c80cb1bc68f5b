// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance [--gallery data/gallery.json] [--known-failures 12,...] [--only 3,4]
//
// Exit status is 0 when every failing criterion is listed in --known-failures.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "labelkit/audit.hpp"
#include "labelkit/generators.hpp"
#include "labelkit/io.hpp"
#include "labelkit/labeling.hpp"
#include "labelkit/predictor.hpp"

using namespace labelkit;

namespace {

// Pinned tolerances.
constexpr double kSetIsoSeconds = 600.0;
constexpr std::size_t kHeuristicPairPairs = 10000;
constexpr int kPosetMinInstances = 10;
constexpr int kHierarchySamples = 500;
constexpr int kTrickTrials = 500;
constexpr int kTrickMaxNodes = 7;
constexpr int kDrnlMaxSum = 20;
constexpr double kAucMargin = 0.03;
constexpr double kGradientTolerance = 1e-4;
constexpr double kBenchmarkSeconds = 900.0;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double x, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::string sci(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

std::vector<GalleryInstance> load_gallery(const std::string& path) {
  return gallery_from_json(json::parse(read_file(path)));
}

Outcome criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  const AuditResult r = audit_set_isomorphism(5, {1, 2, 3}, 0);
  const double secs = seconds_since(t0);
  const bool ok = r.passed() && r.agreements == r.instances && r.details.at("exhaustive_up_to") == 5 &&
                  secs < kSetIsoSeconds;
  return {ok, std::to_string(r.instances) + " instances, " + std::to_string(r.counterexamples.size()) +
                  " counterexamples, " + fmt(secs, 1) + " s"};
}

Outcome criterion_2(const std::string& gallery_path) {
  const AuditResult r = audit_gae_failure(gae_instances(5));
  bool shipped = false;
  for (const auto& x : load_gallery(gallery_path)) {
    if (x.vanilla_wl || !x.oracle) continue;
    const auto& s1 = x.s1.members();
    const auto& s2 = x.s2.members();
    shipped = shipped || (x.g1.size() == 6 && s1.size() == 2 && s2.size() == 2 &&
                          x.g1.has_edge(s1[0], s1[1]) != x.g2.has_edge(s2[0], s2[1]));
  }
  const bool ok = r.passed() && r.details.at("c6_exhibited").get<bool>() &&
                  r.details.at("failures_exhibited").get<int>() >= 1 && shipped;
  return {ok, std::to_string(r.details.at("failures_exhibited").get<int>()) + " aggregation failures, C6 exhibited " +
                  (r.details.at("c6_exhibited").get<bool>() ? "yes" : "no") + ", C6 pair in shipped gallery " +
                  (shipped ? "yes" : "no")};
}

Outcome criterion_3() {
  // Rank oracle: increasing sum, then increasing minimum, starting at 2.
  std::int64_t rank = 2;
  int checked = 0, wrong = 0;
  for (int d = 2; d <= kDrnlMaxSum; ++d) {
    for (int lo = 1; lo <= d / 2; ++lo, ++rank) {
      for (auto [x, y] : {std::pair{lo, d - lo}, std::pair{d - lo, lo}}) {
        ++checked;
        wrong += drnl_label(x, y) != rank;
      }
    }
  }
  const bool stated = drnl_label(1, 1) == 2 && drnl_label(1, 2) == 3 && drnl_label(2, 2) == 5;
  return {wrong == 0 && stated, std::to_string(checked) + " radius pairs, " + std::to_string(wrong) +
                                    " mismatches, stated values " + (stated ? "match" : "differ")};
}

Outcome criterion_4() {
  const AuditResult r = audit_heuristics(kHeuristicPairPairs, 3, 0);
  const auto sampled = r.details.at("sampled_pair_pairs").get<std::size_t>();
  const auto witnesses = r.details.at("unlabeled_witnesses").size();
  const bool ok = r.passed() && sampled >= kHeuristicPairPairs && witnesses >= 1;
  return {ok, std::to_string(sampled) + " sampled pair-pairs + " +
                  std::to_string(r.details.at("class_pairs").get<std::size_t>()) + " class pairs, " +
                  std::to_string(r.details.at("violations").get<std::size_t>()) + " violations, " +
                  std::to_string(witnesses) + " CN 1 vs 0 witnesses"};
}

Outcome criterion_5() {
  const AuditResult r = audit_boost_trend({50, 100, 200}, 5, 3, 3, 0);
  std::string table;
  for (const auto& row : r.details.at("table")) table += " " + row.at("counts").dump();
  return {r.passed(), "counts per seed (n=50,100,200):" + table};
}

Outcome criterion_6() {
  const AuditResult r = audit_subset_labeling(6);
  const auto& d = r.details;
  const bool ok = d.at("pooling_disagreements") == 0 && d.at("n_max") == 6 && r.passed();
  return {ok, std::to_string(d.at("pooling_pairs").get<std::size_t>()) + " instance pairs over " +
                  std::to_string(d.at("targets").get<std::size_t>()) + " targets, " +
                  d.at("pooling_disagreements").dump() + " disagreements"};
}

Outcome criterion_7(const std::string& gallery_path) {
  const Graph c6 = cycle_graph(6);
  const Graph two_triangles = disjoint_union(complete_graph(3), complete_graph(3));
  bool a = false, b = false;
  for (const auto& x : load_gallery(gallery_path)) {
    if (x.subset_one_wl && !x.set_zero_one_wl && x.g1 == c6 && x.g2 == two_triangles && x.s1.size() == 6) a = true;
    if (x.set_zero_one_wl && !x.subset_one_wl && x.provenance != "standard") b = true;
  }
  return {a && b, std::string("C6 vs 2K3 subset-beats-set ") + (a ? "shipped" : "missing") +
                      ", searched set-beats-subset " + (b ? "shipped" : "missing") + ", verified at load"};
}

Outcome criterion_8() {
  const AuditResult r = audit_hypergraph(4, 3);
  return {r.details.at("hypergraph_iso_disagreements") == 0 && r.passed(),
          std::to_string(r.details.at("hypergraphs").get<std::size_t>()) + " hypergraphs, " +
              std::to_string(r.details.at("hypergraph_iso_pairs").get<std::size_t>()) + " pairs, " +
              r.details.at("hypergraph_iso_disagreements").dump() + " disagreements"};
}

Outcome criterion_9() {
  const AuditResult r = audit_poset(4);
  const int seps = r.details.at("orientation_separations").get<int>();
  return {r.passed() && seps >= kPosetMinInstances,
          std::to_string(seps) + " orientation separations, " + std::to_string(r.counterexamples.size()) +
              " soundness counterexamples"};
}

Outcome criterion_10() {
  const AuditResult r = audit_wl_hierarchy(6, kHierarchySamples, 0);
  const auto& d = r.details;
  const bool ok = r.passed() && d.at("kwl_pooling_samples") == kHierarchySamples &&
                  d.at("klwl_order_samples") == kHierarchySamples && d.at("kwl_pooling_disagreements") == 0 &&
                  d.at("klwl_order_disagreements") == 0;
  return {ok, "k-WL vs pooling " + d.at("kwl_pooling_samples").dump() + " pairs, " + d.at("kwl_pooling_disagreements").dump() +
                  " disagreements; tuple colors vs order labels " + d.at("klwl_order_samples").dump() + " pairs, " +
                  d.at("klwl_order_disagreements").dump() + " disagreements"};
}

Outcome criterion_11() {
  const AuditResult r = audit_tricks(kTrickTrials, kTrickMaxNodes, 0);
  int violations = 0;
  for (const auto& [name, t] : r.details.at("tricks").items())
    violations += t.at("equivariance_violations").get<int>() + t.at("distinguishing_violations").get<int>();
  return {r.passed(), std::to_string(r.details.at("tricks").size()) + " tricks x " + std::to_string(kTrickTrials) +
                          " trials, " + std::to_string(violations) + " violations"};
}

Outcome criterion_12() {
  const auto t0 = std::chrono::steady_clock::now();
  const Graph g = synthetic_benchmark_graph(0);
  const std::vector<Variant> variants{Variant::no, Variant::zo, Variant::drnl};
  const BenchmarkReport rep = benchmark(g, "synthetic", variants, {0, 1, 2, 3, 4});
  const double secs = seconds_since(t0);
  const double no = rep.row("no").mean, zo = rep.row("zo").mean, drnl = rep.row("drnl").mean;
  const double grad = gradient_check(0);
  const bool ok = zo > no && drnl >= zo && zo - no > kAucMargin && grad < kGradientTolerance && secs < kBenchmarkSeconds;
  return {ok, "NO " + fmt(no) + ", ZO " + fmt(zo) + ", DRNL " + fmt(drnl) + ", ZO-NO " + fmt(zo - no) +
                  " (need > " + fmt(kAucMargin, 2) + "), DRNL>=ZO " + (drnl >= zo ? "yes" : "no") +
                  ", gradient rel err " + sci(grad) + ", " + fmt(secs, 1) + " s"};
}

std::set<int> parse_list(const std::string& s) {
  std::set<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.insert(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::string gallery_path = "data/gallery.json";
  std::set<int> known, only;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--gallery") gallery_path = argv[i + 1];
    else if (flag == "--known-failures") known = parse_list(argv[i + 1]);
    else if (flag == "--only") only = parse_list(argv[i + 1]);
    else {
      std::cerr << "unknown flag " << flag << "\n";
      return 2;
    }
  }
  const std::map<int, std::pair<std::string, std::function<Outcome()>>> criteria{
      {1, {"set isomorphism vs labeled codes, exhaustive n<=5", criterion_1}},
      {2, {"unlabeled aggregation failure", [&] { return criterion_2(gallery_path); }}},
      {3, {"DRNL closed form vs rank oracle", criterion_3}},
      {4, {"labeled WL determines CN/AA/RA", criterion_4}},
      {5, {"zero-one labeling boost trend", criterion_5}},
      {6, {"subset(|S|-1) pooling vs set labeling, n<=6", criterion_6}},
      {7, {"gallery separations", [&] { return criterion_7(gallery_path); }}},
      {8, {"hypergraph vs incidence graph isomorphism", criterion_8}},
      {9, {"directed link orientation with Hasse labels", criterion_9}},
      {10, {"k-WL pooling and k,l-WL tuple colors", criterion_10}},
      {11, {"labeling trick validity", criterion_11}},
      {12, {"benchmark ordering and gradient check", criterion_12}},
  };
  int unexpected = 0;
  for (const auto& [id, entry] : criteria) {
    if (!only.empty() && !only.count(id)) continue;
    Outcome o;
    try {
      o = entry.second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << entry.first << "  [" << o.detail
              << "]";
    if (!o.pass && known.count(id)) std::cout << "  (known failure)";
    std::cout << std::endl;
    if (!o.pass && !known.count(id)) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
