#include "labelkit/wl.hpp"

#include <algorithm>

#include "labelkit/errors.hpp"

namespace labelkit {

using detail::Signature;

int Coloring::num_classes(int round) const { return detail::count_classes(rounds.at(round)); }

namespace {

Signature initial_signature(const Graph& g, const NodeLabeling* init, NodeId v) {
  Signature sig;
  for (Fixed f : g.node_features(v)) sig.push_back(f.raw());
  if (init) {
    const auto& row = (*init)[v];
    sig.insert(sig.end(), row.begin(), row.end());
  }
  return sig;
}

void append_neighborhood(Signature& sig, std::span<const NodeId> nbrs, std::span<const FeatureVec> feats,
                         const std::vector<int>& colors) {
  std::vector<Signature> chunks;
  chunks.reserve(nbrs.size());
  for (std::size_t k = 0; k < nbrs.size(); ++k) {
    Signature c{colors[nbrs[k]]};
    for (Fixed f : feats[k]) c.push_back(f.raw());
    chunks.push_back(std::move(c));
  }
  detail::append_multiset(sig, chunks);
}

Signature refine_signature(const Graph& g, const std::vector<int>& colors, NodeId v) {
  Signature sig{colors[v]};
  append_neighborhood(sig, g.in_neighbors(v), g.in_edge_features(v), colors);
  if (g.directed()) append_neighborhood(sig, g.out_neighbors(v), g.out_edge_features(v), colors);
  return sig;
}

void check_labels(const Graph& g, const NodeLabeling* init) {
  if (init && init->size() != g.size()) {
    throw InvalidArgument("initial labeling covers " + std::to_string(init->size()) +
                          " nodes but the graph has " + std::to_string(g.size()));
  }
}

}  // namespace

Coloring wl_refine(const Graph& g, const NodeLabeling* init, Layers layers) {
  check_labels(g, init);
  if (layers.count && *layers.count < 0) throw InvalidArgument("negative layer count");
  const int n = g.size();
  std::vector<Signature> sigs(n);
  for (NodeId v = 0; v < n; ++v) sigs[v] = initial_signature(g, init, v);

  Coloring out;
  out.rounds.push_back(detail::dense_ranks(sigs));
  int classes = detail::count_classes(out.rounds.back());
  for (int t = 0; !layers.count || t < *layers.count; ++t) {
    const auto& prev = out.rounds.back();
    for (NodeId v = 0; v < n; ++v) sigs[v] = refine_signature(g, prev, v);
    out.rounds.push_back(detail::dense_ranks(sigs));
    const int next = detail::count_classes(out.rounds.back());
    if (next == classes) {
      out.converged = true;
      if (!layers.count) break;
    }
    classes = next;
  }
  if (n == 0) out.converged = true;
  return out;
}

// ------------------------------------------------------------------ joint

JointRefinementContext::JointRefinementContext(std::span<const LabeledGraph> parts) {
  if (parts.empty()) throw InvalidArgument("joint refinement needs at least one graph");
  const bool directed = parts[0].graph->directed();
  const int node_dim = parts[0].graph->node_dim();
  const int edge_dim = parts[0].graph->edge_dim();
  const int label_width = parts[0].labels ? parts[0].labels->width() : 0;
  std::vector<Edge> edges;
  std::vector<FeatureVec> feats;
  offsets.push_back(0);
  for (const LabeledGraph& part : parts) {
    const Graph& g = *part.graph;
    check_labels(g, part.labels);
    const int width = part.labels ? part.labels->width() : 0;
    if (g.directed() != directed || g.node_dim() != node_dim || width != label_width ||
        (g.num_arcs() > 0 && g.edge_dim() != edge_dim)) {
      throw InvalidArgument("joint refinement parts disagree on directedness or feature widths");
    }
    const int base = offsets.back();
    for (NodeId v = 0; v < g.size(); ++v) {
      FeatureVec f = g.node_features(v);
      if (part.labels) {
        for (std::int64_t x : (*part.labels)[v]) f.push_back(Fixed::from_raw(x));
      }
      feats.push_back(std::move(f));
    }
    for (Edge e : g.edges()) {
      e.from += base;
      e.to += base;
      edges.push_back(std::move(e));
    }
    offsets.push_back(base + g.size());
  }
  union_graph = Graph(offsets.back(), directed, std::move(edges), std::move(feats));
}

std::span<const int> JointRefinementContext::colors_of(const Coloring& c, std::size_t part) const {
  const auto& colors = c.final_colors();
  return std::span<const int>(colors).subspan(offsets[part], offsets[part + 1] - offsets[part]);
}

std::vector<std::vector<int>> joint_refine(std::span<const LabeledGraph> parts, Layers layers) {
  const JointRefinementContext ctx(parts);
  const Coloring c = wl_refine(ctx.union_graph, nullptr, layers);
  std::vector<std::vector<int>> out;
  out.reserve(parts.size());
  for (std::size_t p = 0; p < parts.size(); ++p) {
    auto span = ctx.colors_of(c, p);
    out.emplace_back(span.begin(), span.end());
  }
  return out;
}

namespace {

std::vector<int> readout_multiset(const std::vector<int>& colors, const NodePoset& s, Readout readout) {
  std::vector<int> bag;
  if (readout == Readout::whole_graph) {
    bag = colors;
  } else {
    for (NodeId v : s.members()) bag.push_back(colors.at(v));
  }
  std::sort(bag.begin(), bag.end());
  return bag;
}

}  // namespace

bool wl_distinguishes(const Graph& g1, const NodeLabeling* l1, const NodePoset& s1, const Graph& g2,
                      const NodeLabeling* l2, const NodePoset& s2, Layers layers, Readout readout) {
  if (g1.directed() != g2.directed() || g1.node_dim() != g2.node_dim() ||
      (l1 ? l1->width() : 0) != (l2 ? l2->width() : 0)) {
    return true;
  }
  const LabeledGraph parts[] = {{&g1, l1}, {&g2, l2}};
  const auto colors = joint_refine(parts, layers);
  return readout_multiset(colors[0], s1, readout) != readout_multiset(colors[1], s2, readout);
}

// ------------------------------------------------------------- shared table

std::size_t ColorTable::Hash::operator()(const Signature& s) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ s.size();
  for (std::int64_t x : s) {
    std::uint64_t z = static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    h ^= z ^ (z >> 31);
  }
  return static_cast<std::size_t>(h);
}

int ColorTable::intern(const Signature& sig) {
  auto [it, inserted] = ids_.emplace(sig, static_cast<int>(ids_.size()));
  return it->second;
}

Coloring wl_refine_shared(ColorTable& table, const Graph& g, const NodeLabeling* init, int depth) {
  check_labels(g, init);
  const int n = g.size();
  Coloring out;
  std::vector<int> colors(n);
  for (NodeId v = 0; v < n; ++v) {
    Signature sig{0};
    const Signature body = initial_signature(g, init, v);
    sig.insert(sig.end(), body.begin(), body.end());
    colors[v] = table.intern(sig);
  }
  out.rounds.push_back(colors);
  for (int t = 1; t <= depth; ++t) {
    const auto& prev = out.rounds.back();
    for (NodeId v = 0; v < n; ++v) {
      Signature sig{t};
      const Signature body = refine_signature(g, prev, v);
      sig.insert(sig.end(), body.begin(), body.end());
      colors[v] = table.intern(sig);
    }
    out.rounds.push_back(colors);
  }
  return out;
}

}  // namespace labelkit
