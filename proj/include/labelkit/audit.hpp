#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "labelkit/graph.hpp"
#include "labelkit/heuristics.hpp"
#include "labelkit/isomorphism.hpp"

namespace labelkit {

/// Outcome of one claim audit. PASS exactly when no counterexample was found.
struct AuditResult {
  std::string claim;
  std::size_t instances = 0;
  std::size_t agreements = 0;
  /// Serialized instances; each carries a "kind" that replay_counterexample understands.
  std::vector<nlohmann::json> counterexamples;
  /// Claim-specific counts, witnesses and parameters.
  nlohmann::json details = nlohmann::json::object();

  bool passed() const { return counterexamples.empty(); }
  std::string verdict() const { return passed() ? "PASS" : "FAIL"; }
  nlohmann::json to_json() const;
};

/// Re-evaluates a serialized counterexample. True if it still fails.
bool replay_counterexample(const nlohmann::json& counterexample);

/// Set isomorphism against labeled-graph codes on set targets. Graphs with at most
/// min(n_max, 5) nodes are enumerated exhaustively (connected graphs, every
/// target of each size). Larger n up to n_max are sampled: `sampled_pairs`
/// pairs per n, half of them planted isomorphic copies. Ground truth is the
/// backtracking set-graph isomorphism search; it is compared with equality of
/// the zero-one labeled graphs' canonical codes and with equality of the
/// multisets of canonical node codes inside the labeled graphs.
AuditResult audit_set_isomorphism(int n_max = 5, std::vector<int> set_sizes = {1, 2, 3}, std::size_t sampled_pairs = 2000,
                            std::uint64_t seed = 0);

/// Instances for the aggregation failure audit.
struct SetPairInstance {
  std::string name;
  Graph g1;
  NodePoset s1;
  Graph g2;
  NodePoset s2;
};

/// Default instances: the 6-cycle link pair plus every same-size pair of
/// 2-sets in connected graphs with at most n_max nodes.
std::vector<SetPairInstance> gae_instances(int n_max = 5);

/// Aggregating unlabeled canonical node codes over the targets: exhibits
/// pairs where the aggregate ties while the sets are not isomorphic. FAIL if
/// the 6-cycle pair is not exhibited or the aggregate ever separates
/// isomorphic sets.
AuditResult audit_gae_failure(const std::vector<SetPairInstance>& instances);

enum class BoostLabeling { zero_one, subset_one };

struct BoostCount {
  int n = 0;
  int depth = 0;
  std::size_t count = 0;  // triples (u, v, w) with u < v
  std::vector<std::array<NodeId, 3>> listing;  // first few triples
  int max_degree = 0;
  double degree_bound = 0.0;  // ((1 - eps) log n)^(1 / (2h + 2)) at the smallest admissible eps
  bool degree_condition = false;
};

/// Link pairs (u, w), (v, w) where depth-h vanilla WL gives u and v one
/// color but the labeled links get different representations. Labeled
/// colors are computed on h-hop enclosing subgraphs through one shared
/// color table, which reproduces the whole-graph depth-h colors.
BoostCount count_boosted_link_pairs(const Graph& g, int depth = 3, BoostLabeling labeling = BoostLabeling::zero_one,
                                    std::size_t listing_limit = 10);

/// Counts on seeded bounded-degree random graphs for each n and seed.
/// PASS when every count is positive and counts never decrease in n for any seed.
AuditResult audit_boost_trend(std::vector<int> sizes = {50, 100, 200}, int seeds = 5, int max_degree = 3,
                              int depth = 3, std::uint64_t seed = 0);

/// Heuristics determined by labeled 1-WL, on random graphs with at most 40 nodes (plus regular graphs and
/// cycles so equal representations occur). Also requires the 6-cycle
/// witness of unlabeled-equal links with CN 1 vs 0.
AuditResult audit_heuristics(std::size_t pair_pairs = 10000, int depth = 3, std::uint64_t seed = 0);

/// Subset pooling and single-subset labeling by oracle over all graphs with at
/// most n_max nodes and targets of size 2 and 3; the 6-cycle subset(1) tie;
/// set vs subset separations in both directions with 1-WL (gallery instances).
AuditResult audit_subset_labeling(int n_max = 6);

/// Directed link orientation on all directed graphs with at most n_max
/// nodes, plus Hasse-labeled poset codes for posets of size <= 3.
AuditResult audit_poset(int n_max = 4);

/// Hypergraph isomorphism via incidence graphs over all hypergraphs with at
/// most n_max nodes and m_max hyperedges and posets of size <= 2; zero-one set
/// codes on the incidence graph for set targets.
AuditResult audit_hypergraph(int n_max = 4, int m_max = 3);

/// 2-WL against 1-WL on all graphs with at most n_max nodes; k-WL against
/// k-WL with l-pooling on `samples` graph pairs; k,l-WL tuple colors
/// against linear-order labels plus 1-WL on `samples` tuple pairs.
AuditResult audit_wl_hierarchy(int n_max = 6, int samples = 500, std::uint64_t seed = 0);

/// Labeling-trick validity for every shipped trick.
AuditResult audit_tricks(int trials = 500, int n_max = 7, std::uint64_t seed = 0);

// ------------------------------------------------------------------ gallery

struct GalleryInstance {
  std::string name;
  std::string provenance;  // "searched" or "standard"
  Graph g1;
  NodePoset s1;
  Graph g2;
  NodePoset s2;
  /// Expected verdicts, true meaning "separates".
  bool vanilla_wl = false;
  bool set_zero_one_wl = false;
  bool subset_one_wl = false;
  bool oracle = false;
};

/// Verified separation instances. Expectations are searched
/// for or stated, then re-checked against the engines before returning;
/// any mismatch throws ValidationError.
std::vector<GalleryInstance> gallery();

/// Live verdicts for one instance, in GalleryInstance field order.
std::array<bool, 4> evaluate_gallery_instance(const GalleryInstance& inst);

nlohmann::json gallery_to_json(const std::vector<GalleryInstance>& items);
std::vector<GalleryInstance> gallery_from_json(const nlohmann::json& j);

/// Names accepted by run_audit: set_iso gae boost heuristics subset poset
/// hypergraph hierarchy tricks, or all.
std::vector<std::string> audit_claims();

struct AuditConfig {
  std::uint64_t seed = 0;
  int n_max = 5;
  /// Smaller sample sizes, for smoke runs.
  bool quick = false;
};

std::vector<AuditResult> run_audit(const std::string& claim, const AuditConfig& cfg);

}  // namespace labelkit
