#include "labelkit/node_labeling.hpp"

#include "labelkit/errors.hpp"

namespace labelkit {

NodeLabeling::NodeLabeling(std::vector<std::vector<std::int64_t>> labels) : labels_(std::move(labels)) {
  width_ = labels_.empty() ? 0 : static_cast<int>(labels_[0].size());
  for (const auto& row : labels_) {
    if (static_cast<int>(row.size()) != width_) throw InvalidArgument("label vectors differ in width");
  }
}

NodeLabeling NodeLabeling::scalar(const std::vector<std::int64_t>& values) {
  NodeLabeling l(static_cast<int>(values.size()), 1);
  for (std::size_t v = 0; v < values.size(); ++v) l.labels_[v][0] = values[v];
  return l;
}

NodeLabeling NodeLabeling::permuted(const Permutation& p) const {
  if (p.size() != size()) throw InvalidArgument("permutation size does not match labeling");
  NodeLabeling out(size(), width_);
  for (NodeId v = 0; v < size(); ++v) out.labels_[p(v)] = labels_[v];
  return out;
}

Graph NodeLabeling::stacked_onto(const Graph& g) const {
  if (g.size() != size()) throw InvalidArgument("labeling size does not match graph");
  std::vector<FeatureVec> feats(g.size());
  for (NodeId v = 0; v < g.size(); ++v) {
    feats[v] = g.node_features(v);
    for (std::int64_t x : labels_[v]) feats[v].push_back(Fixed::from_raw(x));
  }
  return g.with_node_features(std::move(feats));
}

}  // namespace labelkit
