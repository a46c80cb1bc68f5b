#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "labelkit/detail/signature.hpp"
#include "labelkit/graph.hpp"
#include "labelkit/node_labeling.hpp"

namespace labelkit {

/// Number of refinement rounds: a fixed count or "until the partition is stable".
struct Layers {
  static constexpr int kDefaultDepth = 3;

  std::optional<int> count;

  static Layers converge() { return {}; }
  static Layers fixed(int rounds = kDefaultDepth) { return {rounds}; }
  bool converges() const { return !count.has_value(); }
};

/// WL colors per round. rounds[0] holds the initial colors.
struct Coloring {
  std::vector<std::vector<int>> rounds;
  bool converged = false;

  const std::vector<int>& final_colors() const { return rounds.back(); }
  int num_refinements() const { return static_cast<int>(rounds.size()) - 1; }
  int num_classes(int round) const;
};

/// 1-WL color refinement.
///
/// Round 0 colors come from node features and the optional initial labels.
/// Round t+1 color is the dense id of (own color, multiset of (neighbor color,
/// edge features) over in-neighbors, and the same over out-neighbors when
/// the graph is directed). Ids are ranks in the sorted signature table, so
/// they are invariant under node permutation. Convergence stops once the
/// class count stays unchanged for one round.
Coloring wl_refine(const Graph& g, const NodeLabeling* init = nullptr, Layers layers = Layers::converge());

/// A graph paired with an optional labeling, as consumed by joint refinement.
struct LabeledGraph {
  const Graph* graph = nullptr;
  const NodeLabeling* labels = nullptr;
};

/// Disjoint union of several labeled graphs. Labels become trailing node
/// features; no origin tag enters the initial colors.
struct JointRefinementContext {
  Graph union_graph;
  std::vector<int> offsets;  // first union node of each part, plus a final sentinel

  explicit JointRefinementContext(std::span<const LabeledGraph> parts);
  std::span<const int> colors_of(const Coloring& c, std::size_t part) const;
};

/// Refines the disjoint union and returns final colors split per part.
/// Colors are comparable across parts. Parts must agree on directedness and
/// on feature and label widths.
std::vector<std::vector<int>> joint_refine(std::span<const LabeledGraph> parts, Layers layers);

enum class Readout {
  targets,      ///< multiset of target member colors
  whole_graph,  ///< multiset of all node colors
};

/// True iff joint refinement gives different readouts for the two inputs.
/// Labels may be null for vanilla (unlabeled) refinement.
bool wl_distinguishes(const Graph& g1, const NodeLabeling* l1, const NodePoset& s1, const Graph& g2,
                      const NodeLabeling* l2, const NodePoset& s2, Layers layers = Layers::converge(),
                      Readout readout = Readout::targets);

/// Signature dictionary shared across many fixed-depth refinements, so colors
/// of separately refined graphs are directly comparable. Ids are handed out in
/// first-seen order. Not thread-safe.
class ColorTable {
 public:
  int intern(const detail::Signature& sig);
  std::size_t size() const { return ids_.size(); }

 private:
  struct Hash {
    std::size_t operator()(const detail::Signature& s) const;
  };
  std::unordered_map<detail::Signature, int, Hash> ids_;
};

/// Fixed-depth refinement through a shared table. Colors are global ids that
/// already encode the round, so histograms over all rounds never collide.
Coloring wl_refine_shared(ColorTable& table, const Graph& g, const NodeLabeling* init, int depth);

}  // namespace labelkit
