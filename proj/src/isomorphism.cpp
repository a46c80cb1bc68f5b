#include "labelkit/isomorphism.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "labelkit/detail/signature.hpp"
#include "labelkit/errors.hpp"

namespace labelkit {

using detail::Signature;

std::string CanonicalCode::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 15]);
  }
  return out;
}

namespace {

void check_bound(int n, const OracleOptions& opts) {
  if (n > opts.max_nodes) {
    throw OracleUnavailable("oracle unavailable: " + std::to_string(n) +
                            " nodes exceeds the exhaustive search bound of " +
                            std::to_string(opts.max_nodes));
  }
}

CanonicalCode encode(const Signature& header, const Signature& body) {
  CanonicalCode code;
  code.bytes.reserve((header.size() + body.size()) * 8);
  auto put = [&](std::int64_t v) {
    const auto u = static_cast<std::uint64_t>(v);
    for (int shift = 56; shift >= 0; shift -= 8) code.bytes.push_back(static_cast<char>((u >> shift) & 0xff));
  };
  for (auto v : header) put(v);
  for (auto v : body) put(v);
  return code;
}

/// Dense view of a marked graph used by the canonical search.
struct MarkedGraph {
  int n = 0;
  bool directed = false;
  int edge_dim = 0;
  std::vector<std::vector<std::int64_t>> node_part;  // node features + member flag
  std::vector<std::vector<int>> adj;                  // edge index or -1
  std::vector<FeatureVec> edge_feats;
  std::vector<std::vector<char>> leq;

  MarkedGraph(const NodePoset& s, const Graph& g) : n(g.size()), directed(g.directed()), edge_dim(g.edge_dim()) {
    node_part.resize(n);
    for (NodeId v = 0; v < n; ++v) {
      for (Fixed f : g.node_features(v)) node_part[v].push_back(f.raw());
      node_part[v].push_back(s.contains(v) ? 1 : 0);
    }
    adj.assign(n, std::vector<int>(n, -1));
    for (NodeId v = 0; v < n; ++v) {
      auto nbrs = g.out_neighbors(v);
      auto feats = g.out_edge_features(v);
      for (std::size_t k = 0; k < nbrs.size(); ++k) {
        adj[v][nbrs[k]] = static_cast<int>(edge_feats.size());
        edge_feats.push_back(feats[k]);
      }
    }
    leq.assign(n, std::vector<char>(n, 0));
    for (auto [a, b] : s.relation()) {
      if (a < 0 || a >= n || b < 0 || b >= n) throw InvalidArgument("poset member outside graph");
      leq[a][b] = 1;
    }
  }

  void append_arc(Signature& out, NodeId a, NodeId b) const {
    const int e = adj[a][b];
    out.push_back(e >= 0 ? 1 : 0);
    for (int d = 0; d < edge_dim; ++d) out.push_back(e >= 0 ? edge_feats[e][d].raw() : 0);
  }

  /// Row for node v placed after the nodes in `placed`.
  void append_row(Signature& out, NodeId v, const std::vector<NodeId>& placed) const {
    out.insert(out.end(), node_part[v].begin(), node_part[v].end());
    for (NodeId w : placed) {
      append_arc(out, v, w);
      if (directed) append_arc(out, w, v);
      out.push_back(leq[v][w]);
      out.push_back(leq[w][v]);
    }
  }

  /// Isomorphism-invariant colors used to restrict the node orders searched.
  std::vector<int> invariant_colors() const {
    std::vector<Signature> sigs(n);
    for (NodeId v = 0; v < n; ++v) {
      sigs[v] = node_part[v];
      std::int64_t up = 0, down = 0;
      for (NodeId w = 0; w < n; ++w) {
        if (w == v) continue;
        up += leq[v][w];
        down += leq[w][v];
      }
      sigs[v].push_back(up);
      sigs[v].push_back(down);
    }
    std::vector<int> colors = detail::dense_ranks(sigs);
    int classes = detail::count_classes(colors);
    for (;;) {
      for (NodeId v = 0; v < n; ++v) {
        Signature sig{colors[v]};
        std::vector<Signature> out, in, above, below;
        for (NodeId w = 0; w < n; ++w) {
          if (w == v) continue;
          if (adj[v][w] >= 0) {
            Signature c{colors[w]};
            for (Fixed f : edge_feats[adj[v][w]]) c.push_back(f.raw());
            out.push_back(std::move(c));
          }
          if (directed && adj[w][v] >= 0) {
            Signature c{colors[w]};
            for (Fixed f : edge_feats[adj[w][v]]) c.push_back(f.raw());
            in.push_back(std::move(c));
          }
          if (leq[v][w]) above.push_back({colors[w]});
          if (leq[w][v]) below.push_back({colors[w]});
        }
        detail::append_multiset(sig, out);
        detail::append_multiset(sig, in);
        detail::append_multiset(sig, above);
        detail::append_multiset(sig, below);
        sigs[v] = std::move(sig);
      }
      std::vector<int> next = detail::dense_ranks(sigs);
      const int next_classes = detail::count_classes(next);
      colors = std::move(next);
      if (next_classes == classes) break;
      classes = next_classes;
    }
    return colors;
  }
};

/// Depth-first search for the minimal serialization with prefix pruning.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const MarkedGraph& mg) : mg_(mg) {
    const std::vector<int> colors = mg.invariant_colors();
    cell_of_position_.resize(mg.n);
    std::vector<int> order(mg.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return colors[a] < colors[b]; });
    for (int p = 0; p < mg.n; ++p) cell_of_position_[p] = colors[order[p]];
    color_ = colors;
    used_.assign(mg.n, false);
  }

  Signature run() {
    Signature cur;
    recurse(cur);
    return best_;
  }

 private:
  // Each candidate prefix is compared against the best full serialization
  // found so far; a prefix that already exceeds it cannot lead to a minimum.
  void recurse(Signature& cur) {
    const int p = static_cast<int>(placed_.size());
    if (p == mg_.n) {
      if (!have_best_ || cur < best_) {
        best_ = cur;
        have_best_ = true;
      }
      return;
    }
    for (NodeId v = 0; v < mg_.n; ++v) {
      if (used_[v] || color_[v] != cell_of_position_[p]) continue;
      const std::size_t mark = cur.size();
      mg_.append_row(cur, v, placed_);
      if (have_best_ && std::lexicographical_compare_three_way(
                            cur.begin(), cur.end(), best_.begin(), best_.begin() + cur.size()) > 0) {
        cur.resize(mark);
        continue;
      }
      used_[v] = true;
      placed_.push_back(v);
      recurse(cur);
      placed_.pop_back();
      used_[v] = false;
      cur.resize(mark);
    }
  }

  const MarkedGraph& mg_;
  std::vector<int> color_;
  std::vector<int> cell_of_position_;
  std::vector<bool> used_;
  std::vector<NodeId> placed_;
  Signature best_;
  bool have_best_ = false;
};

}  // namespace

CanonicalCode canonical_code(const NodePoset& s, const Graph& g, const OracleOptions& opts) {
  check_bound(g.size(), opts);
  const MarkedGraph mg(s, g);
  const Signature header{0x4c4b, 1, g.size(), g.directed() ? 1 : 0, g.node_dim(), g.edge_dim(),
                         static_cast<std::int64_t>(s.size())};
  return encode(header, CanonicalSearch(mg).run());
}

bool are_substructures_isomorphic(const NodePoset& s1, const Graph& g1, const NodePoset& s2,
                                  const Graph& g2, const OracleOptions& opts) {
  if (g1.size() != g2.size()) return false;
  check_bound(g1.size(), opts);
  if (g1.directed() != g2.directed() || g1.node_dim() != g2.node_dim() ||
      g1.edge_dim() != g2.edge_dim() || s1.size() != s2.size() ||
      s1.relation().size() != s2.relation().size() || g1.num_arcs() != g2.num_arcs()) {
    return false;
  }
  const int n = g1.size();
  const MarkedGraph a(s1, g1);
  const MarkedGraph b(s2, g2);

  // Map nodes of (s2, g2) onto (s1, g1) one at a time, checking every
  // constraint against the already placed nodes.
  std::vector<NodeId> image(n, -1);
  std::vector<bool> taken(n, false);
  auto arc_equal = [&](NodeId x2, NodeId y2, NodeId x1, NodeId y1) {
    const int e2 = b.adj[x2][y2];
    const int e1 = a.adj[x1][y1];
    if ((e1 >= 0) != (e2 >= 0)) return false;
    return e1 < 0 || a.edge_feats[e1] == b.edge_feats[e2];
  };
  auto consistent = [&](NodeId v2, NodeId v1) {
    if (a.node_part[v1] != b.node_part[v2]) return false;
    if (g1.degree(v1) != g2.degree(v2)) return false;
    if (a.leq[v1][v1] != b.leq[v2][v2]) return false;
    for (NodeId w2 = 0; w2 < v2; ++w2) {
      const NodeId w1 = image[w2];
      if (!arc_equal(v2, w2, v1, w1) || !arc_equal(w2, v2, w1, v1)) return false;
      if (a.leq[v1][w1] != b.leq[v2][w2] || a.leq[w1][v1] != b.leq[w2][v2]) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, NodeId v2) -> bool {
    if (v2 == n) return true;
    for (NodeId v1 = 0; v1 < n; ++v1) {
      if (taken[v1] || !consistent(v2, v1)) continue;
      taken[v1] = true;
      image[v2] = v1;
      if (self(self, v2 + 1)) return true;
      taken[v1] = false;
    }
    image[v2] = -1;
    return false;
  };
  return search(search, 0);
}

// ----------------------------------------------------------------- hypergraph

namespace {

Signature hypergraph_serialization(const NodePoset& s, const Hypergraph& h,
                                   const std::vector<NodeId>& node_at, const std::vector<int>& edge_at) {
  const int n = h.num_nodes();
  const int m = h.num_hyperedges();
  Signature out;
  for (int p = 0; p < n; ++p) {
    const NodeId v = node_at[p];
    for (Fixed f : h.node_features(v)) out.push_back(f.raw());
    out.push_back(s.contains(v) ? 1 : 0);
    for (int q = 0; q < n; ++q) out.push_back(s.leq(v, node_at[q]) ? 1 : 0);
  }
  for (int p = 0; p < m; ++p) {
    for (Fixed f : h.hyperedge_features(edge_at[p])) out.push_back(f.raw());
  }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < m; ++q) out.push_back(h.incident(node_at[p], edge_at[q]) ? 1 : 0);
  return out;
}

}  // namespace

CanonicalCode hypergraph_canonical_code(const NodePoset& s, const Hypergraph& h,
                                        const OracleOptions& opts) {
  check_bound(h.num_nodes(), opts);
  if (h.num_hyperedges() > opts.max_hyperedges) {
    throw OracleUnavailable("oracle unavailable: " + std::to_string(h.num_hyperedges()) +
                            " hyperedges exceeds the bound of " + std::to_string(opts.max_hyperedges));
  }
  std::vector<NodeId> node_at(h.num_nodes());
  std::iota(node_at.begin(), node_at.end(), 0);
  std::vector<int> edge_at(h.num_hyperedges());
  Signature best;
  bool have = false;
  do {
    std::iota(edge_at.begin(), edge_at.end(), 0);
    do {
      Signature cur = hypergraph_serialization(s, h, node_at, edge_at);
      if (!have || cur < best) {
        best = std::move(cur);
        have = true;
      }
    } while (std::next_permutation(edge_at.begin(), edge_at.end()));
  } while (std::next_permutation(node_at.begin(), node_at.end()));
  const Signature header{0x4c48, 1, h.num_nodes(), h.num_hyperedges(), h.feature_dim(),
                         static_cast<std::int64_t>(s.size())};
  return encode(header, best);
}

bool are_hypergraph_substructures_isomorphic(const NodePoset& s1, const Hypergraph& h1,
                                             const NodePoset& s2, const Hypergraph& h2,
                                             const OracleOptions& opts) {
  if (h1.num_nodes() != h2.num_nodes() || h1.num_hyperedges() != h2.num_hyperedges()) return false;
  return hypergraph_canonical_code(s1, h1, opts) == hypergraph_canonical_code(s2, h2, opts);
}

}  // namespace labelkit
