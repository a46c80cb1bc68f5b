#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "labelkit/graph.hpp"

namespace labelkit {

/// |N(i) ∩ N(j)|, using out-neighborhoods on directed graphs.
int common_neighbors(const Graph& g, NodeId i, NodeId j);

/// Sum of 1/ln(deg w) over common neighbors w. Degrees count distinct
/// neighbors ignoring direction. A common neighbor of degree 1 raises
/// DomainError.
double adamic_adar(const Graph& g, NodeId i, NodeId j);

/// Sum of 1/deg w over common neighbors w.
double resource_allocation(const Graph& g, NodeId i, NodeId j);

struct HeuristicScores {
  int cn = 0;
  double aa = 0.0;
  double ra = 0.0;

  friend bool operator==(const HeuristicScores&, const HeuristicScores&) = default;
};

HeuristicScores score_pair(const Graph& g, NodeId i, NodeId j);

/// A target link inside one graph of a batch.
struct PairRef {
  std::size_t graph = 0;
  NodeId i = 0;
  NodeId j = 0;
};

struct HeuristicCheckReport {
  int depth = 0;
  std::size_t targets = 0;
  std::size_t pair_pairs = 0;          // sampled pairs of targets
  std::size_t labeled_equal = 0;       // of those, equal under labeled WL
  std::size_t class_pairs = 0;         // all labeled-equal target pairs, exhaustively
  std::size_t violations = 0;          // labeled-equal but some heuristic differs
  std::vector<std::string> violation_details;
  /// Targets whose unlabeled member colors agree while CN is 1 vs 0.
  std::vector<std::pair<PairRef, PairRef>> unlabeled_witnesses;

  bool passed() const { return violations == 0; }
};

/// Checks that zero-one labeled WL at the given depth (>= 2) determines CN,
/// AA and RA. Colors come from one shared color table, so targets in
/// different graphs are compared directly. `pair_pairs` random pairs of
/// targets are checked, and every class of labeled-equal targets is
/// checked exhaustively on top.
HeuristicCheckReport heuristic_refinement_check(std::span<const Graph> graphs, std::span<const PairRef> targets,
                                                int depth, std::size_t pair_pairs, std::uint64_t seed);

}  // namespace labelkit
