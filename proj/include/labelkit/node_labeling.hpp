#pragma once

#include <cstdint>
#include <vector>

#include "labelkit/graph.hpp"

namespace labelkit {

/// Per-node integer label vectors produced by a labeling trick.
///
/// Every node carries a vector of the same width. Stacking the labels onto a
/// graph appends them to the node features, which yields the labeled graph
/// that WL refinement and the isomorphism oracle consume.
class NodeLabeling {
 public:
  NodeLabeling() = default;
  NodeLabeling(int n, int width) : width_(width), labels_(n, std::vector<std::int64_t>(width, 0)) {}
  explicit NodeLabeling(std::vector<std::vector<std::int64_t>> labels);
  /// Width-1 labeling.
  static NodeLabeling scalar(const std::vector<std::int64_t>& values);

  int size() const { return static_cast<int>(labels_.size()); }
  int width() const { return width_; }
  const std::vector<std::int64_t>& operator[](NodeId v) const { return labels_[v]; }
  std::vector<std::int64_t>& operator[](NodeId v) { return labels_[v]; }
  const std::vector<std::vector<std::int64_t>>& rows() const { return labels_; }

  /// π(L): the label of node v moves to node π(v).
  NodeLabeling permuted(const Permutation& p) const;
  /// Node features of the result are the original features followed by the
  /// labels. Labels are stored as raw fixed-point values so any int64 fits.
  Graph stacked_onto(const Graph& g) const;

  friend bool operator==(const NodeLabeling&, const NodeLabeling&) = default;

 private:
  int width_ = 0;
  std::vector<std::vector<std::int64_t>> labels_;
};

}  // namespace labelkit
