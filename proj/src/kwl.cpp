#include "labelkit/kwl.hpp"

#include <algorithm>
#include <string>

#include "labelkit/detail/signature.hpp"
#include "labelkit/errors.hpp"

namespace labelkit {

using detail::Signature;

namespace {

std::size_t ipow(int base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= static_cast<std::size_t>(base);
  return r;
}

void decode_tuple(std::size_t index, int n, int k, std::vector<NodeId>& out) {
  out.resize(k);
  for (int i = k - 1; i >= 0; --i) {
    out[i] = static_cast<NodeId>(index % n);
    index /= n;
  }
}

void check_kwl_budget(int n, int k, const KwlBudget& budget) {
  if (k != 2 && k != 3) throw InvalidArgument("k-WL supports k = 2 or 3, got " + std::to_string(k));
  const int limit = k == 2 ? budget.max_nodes_k2 : budget.max_nodes_k3;
  if (n > limit) {
    throw BudgetExceeded(std::to_string(k) + "-WL budget exceeded: " + std::to_string(n) +
                         " nodes, limit " + std::to_string(limit));
  }
}

Signature tuple_type(const Graph& g, const NodeLabeling* labels, const std::vector<NodeId>& t) {
  const int k = static_cast<int>(t.size());
  Signature sig;
  for (NodeId v : t) {
    for (Fixed f : g.node_features(v)) sig.push_back(f.raw());
    if (labels) {
      const auto& row = (*labels)[v];
      sig.insert(sig.end(), row.begin(), row.end());
    }
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) sig.push_back(t[i] == t[j] ? 1 : 0);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      const bool arc = g.has_edge(t[i], t[j]);
      sig.push_back(arc ? 1 : 0);
      if (arc) {
        for (Fixed f : g.edge_features(t[i], t[j])) sig.push_back(f.raw());
      }
    }
  }
  return sig;
}

/// Ranks jointly over all graphs; returns per-graph slices.
std::vector<std::vector<int>> rank_jointly(const std::vector<std::vector<Signature>>& per_graph) {
  std::vector<Signature> all;
  for (const auto& sigs : per_graph) all.insert(all.end(), sigs.begin(), sigs.end());
  const std::vector<int> ranks = detail::dense_ranks(all);
  std::vector<std::vector<int>> out;
  std::size_t pos = 0;
  for (const auto& sigs : per_graph) {
    out.emplace_back(ranks.begin() + pos, ranks.begin() + pos + sigs.size());
    pos += sigs.size();
  }
  return out;
}

int total_classes(const std::vector<std::vector<int>>& colors) {
  int m = -1;
  for (const auto& c : colors)
    for (int x : c) m = std::max(m, x);
  return m + 1;
}

/// Dense ids of sorted color multisets, ranked jointly.
std::vector<int> multiset_ids(const std::vector<std::vector<int>>& bags) {
  std::vector<Signature> sigs;
  sigs.reserve(bags.size());
  for (const auto& bag : bags) {
    Signature s(bag.begin(), bag.end());
    std::sort(s.begin(), s.end());
    sigs.push_back(std::move(s));
  }
  return detail::dense_ranks(sigs);
}

TupleColoring refine_unchecked(std::span<const LabeledGraph> graphs, int k) {
  TupleColoring out;
  out.k = k;
  std::vector<std::vector<Signature>> sigs(graphs.size());
  std::vector<NodeId> t;
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const Graph& g = *graphs[gi].graph;
    const std::size_t count = ipow(g.size(), k);
    sigs[gi].resize(count);
    for (std::size_t idx = 0; idx < count; ++idx) {
      decode_tuple(idx, g.size(), k, t);
      sigs[gi][idx] = tuple_type(g, graphs[gi].labels, t);
    }
  }
  std::vector<std::vector<int>> colors = rank_jointly(sigs);
  int classes = total_classes(colors);
  for (;;) {
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
      const int n = graphs[gi].graph->size();
      const auto& c = colors[gi];
      for (std::size_t idx = 0; idx < c.size(); ++idx) {
        decode_tuple(idx, n, k, t);
        Signature sig{c[idx]};
        std::vector<std::int64_t> bag(n);
        for (int i = 0; i < k; ++i) {
          const std::size_t stride = ipow(n, k - 1 - i);
          const std::size_t base = idx - static_cast<std::size_t>(t[i]) * stride;
          for (NodeId u = 0; u < n; ++u) bag[u] = c[base + static_cast<std::size_t>(u) * stride];
          std::sort(bag.begin(), bag.end());
          sig.insert(sig.end(), bag.begin(), bag.end());
        }
        sigs[gi][idx] = std::move(sig);
      }
    }
    colors = rank_jointly(sigs);
    ++out.rounds;
    const int next = total_classes(colors);
    if (next == classes) break;
    classes = next;
  }
  out.graph_colors = multiset_ids(colors);
  out.tuple_colors = std::move(colors);
  return out;
}

void check_kl(int k, int l, int n, const KwlBudget& budget) {
  if (k != 2 && k != 3) throw InvalidArgument("k,l-WL supports k = 2 or 3");
  if (l != 1 && l != 2) throw InvalidArgument("k,l-WL supports l = 1 or 2");
  if (n > budget.max_nodes_kl) {
    throw BudgetExceeded("k,l-WL budget exceeded: " + std::to_string(n) + " nodes, limit " +
                         std::to_string(budget.max_nodes_kl));
  }
}

NodeLabeling position_marks(int n, std::span<const NodeId> tuple) {
  NodeLabeling marks(n, static_cast<int>(tuple.size()));
  for (std::size_t i = 0; i < tuple.size(); ++i) marks[tuple[i]][i] = 1;
  return marks;
}

}  // namespace

std::size_t tuple_index(std::span<const NodeId> tuple, int n) {
  std::size_t idx = 0;
  for (NodeId v : tuple) idx = idx * n + static_cast<std::size_t>(v);
  return idx;
}

TupleColoring kwl_refine_joint(std::span<const LabeledGraph> graphs, int k, const KwlBudget& budget) {
  for (const auto& lg : graphs) check_kwl_budget(lg.graph->size(), k, budget);
  return refine_unchecked(graphs, k);
}

TupleColoring kwl_refine(const Graph& g, int k, const KwlBudget& budget) {
  const LabeledGraph one[] = {{&g, nullptr}};
  return kwl_refine_joint(one, k, budget);
}

PooledColoring kwl_l_pooling_joint(std::span<const Graph> graphs, int k, int l, const KwlBudget& budget) {
  if (l < 0 || l >= k) throw InvalidArgument("l-pooling requires 0 <= l < k");
  std::vector<LabeledGraph> parts;
  for (const Graph& g : graphs) parts.push_back({&g, nullptr});
  const TupleColoring tc = kwl_refine_joint(parts, k, budget);

  PooledColoring out;
  out.k = k;
  out.l = l;
  std::vector<std::vector<int>> bags;
  std::vector<std::size_t> owner;
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const int n = graphs[gi].size();
    const std::size_t heads = ipow(n, l);
    const std::size_t tails = ipow(n, k - l);
    for (std::size_t h = 0; h < heads; ++h) {
      std::vector<int> bag;
      bag.reserve(tails);
      for (std::size_t s = 0; s < tails; ++s) bag.push_back(tc.tuple_colors[gi][h * tails + s]);
      bags.push_back(std::move(bag));
      owner.push_back(gi);
    }
  }
  const std::vector<int> pooled = multiset_ids(bags);
  out.pooled_colors.assign(graphs.size(), {});
  for (std::size_t b = 0; b < pooled.size(); ++b) out.pooled_colors[owner[b]].push_back(pooled[b]);
  out.graph_colors = multiset_ids(out.pooled_colors);
  return out;
}

PooledColoring kwl_l_pooling(const Graph& g, int k, int l, const KwlBudget& budget) {
  return kwl_l_pooling_joint(std::span<const Graph>(&g, 1), k, l, budget);
}

KlWlResult kl_wl_joint(std::span<const Graph> graphs, int k, int l, const KwlBudget& budget) {
  for (const Graph& g : graphs) check_kl(k, l, g.size(), budget);
  std::vector<NodeLabeling> marks;
  std::vector<std::size_t> owner;
  std::vector<NodeId> t;
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const int n = graphs[gi].size();
    for (std::size_t idx = 0; idx < ipow(n, l); ++idx) {
      decode_tuple(idx, n, l, t);
      marks.push_back(position_marks(n, t));
      owner.push_back(gi);
    }
  }
  std::vector<LabeledGraph> parts;
  for (std::size_t m = 0; m < marks.size(); ++m) parts.push_back({&graphs[owner[m]], &marks[m]});
  const TupleColoring tc = refine_unchecked(parts, k);

  KlWlResult out;
  out.k = k;
  out.l = l;
  out.tuple_colors.assign(graphs.size(), {});
  for (std::size_t m = 0; m < marks.size(); ++m) out.tuple_colors[owner[m]].push_back(tc.graph_colors[m]);
  out.graph_colors = multiset_ids(out.tuple_colors);
  return out;
}

KlWlResult kl_wl(const Graph& g, int k, int l, const KwlBudget& budget) {
  return kl_wl_joint(std::span<const Graph>(&g, 1), k, l, budget);
}

bool kl_wl_tuples_equal(const Graph& g1, std::span<const NodeId> t1, const Graph& g2,
                        std::span<const NodeId> t2, int k, const KwlBudget& budget) {
  if (t1.size() != t2.size()) return false;
  const int l = static_cast<int>(t1.size());
  check_kl(k, l, g1.size(), budget);
  check_kl(k, l, g2.size(), budget);
  const NodeLabeling m1 = position_marks(g1.size(), t1);
  const NodeLabeling m2 = position_marks(g2.size(), t2);
  const LabeledGraph parts[] = {{&g1, &m1}, {&g2, &m2}};
  const TupleColoring tc = refine_unchecked(parts, k);
  return tc.graph_colors[0] == tc.graph_colors[1];
}

}  // namespace labelkit
