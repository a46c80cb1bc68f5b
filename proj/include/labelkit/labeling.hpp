#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "labelkit/graph.hpp"
#include "labelkit/isomorphism.hpp"
#include "labelkit/node_labeling.hpp"
#include "labelkit/wl.hpp"

namespace labelkit {

// ------------------------------------------------------------------ tricks

/// 1 on members of S, 0 elsewhere.
NodeLabeling zero_one(const NodePoset& s, const Graph& g);

/// 1 on nodes of P, 0 elsewhere. P may be any node subset.
NodeLabeling subset_zero_one(std::span<const NodeId> p, const Graph& g);

/// DRNL hash of a radius pair: 1 + min(dx, dy) + (d/2) * ((d/2) + (d%2) - 1)
/// with d = dx + dy. Both radii must be positive.
std::int64_t drnl_label(std::int64_t dx, std::int64_t dy);

/// Double radius node labeling of a link {x, y}. Endpoints get 1. Any other
/// node gets drnl_label(d(i,x), d(i,y)), or 0 when either distance is
/// infinite. With `mask`, d(i,x) is measured with y removed and vice versa.
NodeLabeling drnl(const NodePoset& s, const Graph& g, bool mask = true);

/// Value used by distance encoding for unreachable nodes when uncapped.
inline constexpr std::int64_t kDistanceInfinity = 2147483647;

/// Distance encoding: one slot per member holding the (capped) hop distance,
/// slots sorted ascending. Unreachable nodes get d_max + 1, or
/// kDistanceInfinity when there is no cap. With `mask`, the distance to one
/// member is measured with every other member removed.
NodeLabeling distance_encoding(const NodePoset& s, const Graph& g, std::optional<int> d_max = 3,
                               bool mask = false);

/// DE with DRNL's masking and no distance cap.
NodeLabeling de_plus(const NodePoset& s, const Graph& g);

/// Isomorphism type id of member `u` within the Hasse diagram of `s`.
///
/// The id packs the lexicographically smallest (position of u, arc bits)
/// over all orderings of the diagram, plus the diagram size, so equal ids
/// mean isomorphic (node, diagram) pairs across different posets as well.
/// Supports up to 8 members.
std::int64_t hasse_type_id(const NodePoset& s, NodeId u);

/// 0 outside S; hasse_type_id inside S.
NodeLabeling hasse_embedding(const NodePoset& s, const Graph& g);

/// u_i gets label i for the chain u_1 < u_2 < ...; requires a total order.
NodeLabeling linear_order_labels(const NodePoset& s, const Graph& g);

/// Ordered blocks S_1, S_2, ... such that u < v exactly when u's block comes
/// before v's block. Throws ValidationError if the order has another shape.
std::vector<std::vector<NodeId>> nearly_linear_blocks(const NodePoset& s);

/// Nodes of block S_i get label i.
NodeLabeling nearly_linear_order_labels(const NodePoset& s, const Graph& g);

enum class Trick { zero_one, drnl, de, de_plus, hasse, linear, nearly_linear, subset_zero_one };

std::span<const Trick> all_tricks();
std::string_view trick_name(Trick t);
/// Throws InvalidArgument listing the valid names.
Trick parse_trick(std::string_view name);
std::string valid_trick_names();

/// Applies a trick with its default options. subset_zero_one labels all of S.
NodeLabeling apply_trick(Trick t, const NodePoset& s, const Graph& g);

// ------------------------------------------------------------- subset tricks

/// Selection rule of the one-head routine.
struct SubsetPolicy {
  enum class Kind { random, max_degree, least_element };
  Kind kind = Kind::least_element;
  std::uint64_t seed = 0;

  static SubsetPolicy random(std::uint64_t seed) { return {Kind::random, seed}; }
  static SubsetPolicy max_degree() { return {Kind::max_degree, 0}; }
  static SubsetPolicy least_element() { return {Kind::least_element, 0}; }
};

/// The node picked by the policy. max_degree breaks ties by lowest index;
/// least_element throws ValidationError when no unique minimum exists.
NodeId select_one_head(const NodePoset& s, const Graph& g, const SubsetPolicy& policy);

/// subset_zero_one on the selected node.
NodeLabeling one_head_label(const NodePoset& s, const Graph& g, const SubsetPolicy& policy);

/// What each labeled copy contributes to the pooled multiset.
enum class SubsetReadout {
  targets,       ///< representation of S in the graph labeled by P
  labeled_node,  ///< representation of the single labeled node u (needs k = 1)
  whole_graph,   ///< representation of the whole labeled graph
};

struct PoolingEngine {
  enum class Kind { wl, oracle };
  Kind kind = Kind::oracle;
  Layers layers = Layers::converge();
  OracleOptions oracle = {};

  static PoolingEngine wl(Layers layers = Layers::converge()) { return {Kind::wl, layers, {}}; }
  static PoolingEngine exact(OracleOptions opts = {}) { return {Kind::oracle, Layers::converge(), opts}; }
};

/// Subset(k) pooling: for each graph, the multiset over all size-k subsets P
/// of S of the readout under subset_zero_one(P). True iff the two multisets
/// differ. WL colors come from one joint refinement of every labeled copy.
bool subset_pooling_distinguishes(const Graph& g1, const NodePoset& s1, const Graph& g2,
                                  const NodePoset& s2, int k, const PoolingEngine& engine,
                                  SubsetReadout readout = SubsetReadout::targets);

/// Set labeling verdict with the same engines: zero-one labels on S, then
/// the readout of S (or of the whole graph).
bool set_labeling_distinguishes(const Graph& g1, const NodePoset& s1, const Graph& g2,
                                const NodePoset& s2, const PoolingEngine& engine,
                                Readout readout = Readout::targets);

/// Subset labels depend only on (subset, graph), so targets sharing a
/// selected subset share one labeling.
class SubsetLabelCache {
 public:
  const NodeLabeling& get(int graph_id, const Graph& g, std::vector<NodeId> subset);
  std::size_t size() const { return cache_.size(); }
  std::size_t hits() const { return hits_; }

 private:
  std::map<std::pair<int, std::vector<NodeId>>, NodeLabeling> cache_;
  std::size_t hits_ = 0;
};

// ---------------------------------------------------------------- validator

/// A labeling function under test, plus the kind of targets it accepts.
struct TrickUnderTest {
  enum class Targets { any_set, pair, poset, total_order, nearly_linear };

  std::string name;
  std::function<NodeLabeling(const NodePoset&, const Graph&)> label;
  Targets targets = Targets::any_set;
  bool directed_graphs = false;
};

TrickUnderTest trick_under_test(Trick t);

struct ValidationReport {
  std::string trick;
  int trials = 0;
  int equivariance_violations = 0;
  int distinguishing_checks = 0;
  int distinguishing_violations = 0;
  std::vector<std::string> counterexamples;

  bool passed() const { return equivariance_violations == 0 && distinguishing_violations == 0; }
};

/// Randomized check of the two labeling-trick properties. Each trial draws a
/// graph with at most n_max nodes, a target and a permutation, then checks
/// L(π(S), π(g)) == π(L(S, g)); and, by brute force over all permutations
/// fixing the graph onto a second target, that equal labels force π(S') = S.
ValidationReport validate_labeling_trick(const TrickUnderTest& trick, int trials, int n_max,
                                         std::uint64_t seed);

}  // namespace labelkit
