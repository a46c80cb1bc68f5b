#include <algorithm>
#include <map>
#include <numeric>

#include "audit_internal.hpp"
#include "labelkit/detail/parallel.hpp"
#include "labelkit/errors.hpp"
#include "labelkit/generators.hpp"
#include "labelkit/kwl.hpp"
#include "labelkit/wl.hpp"

namespace labelkit {

using namespace audit_detail;

namespace {

std::vector<std::vector<NodeId>> subsets_of(const std::vector<NodeId>& base, int k) {
  std::vector<std::vector<NodeId>> out;
  const int n = static_cast<int>(base.size());
  if (k < 0 || k > n) return out;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    std::vector<NodeId> s;
    for (int i : idx) s.push_back(base[i]);
    out.push_back(std::move(s));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return out;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<NodeId> all_nodes(int n) {
  std::vector<NodeId> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

NodePoset as_set(const NodePoset& s) { return NodePoset::set(s.members()); }

/// Members of a chain from least to greatest.
std::vector<NodeId> chain_order(const NodePoset& s) {
  std::vector<NodeId> out = s.members();
  std::sort(out.begin(), out.end(), [&](NodeId a, NodeId b) { return a != b && s.leq(a, b); });
  return out;
}

std::vector<CanonicalCode> hasse_member_codes(const NodePoset& s, const Graph& g) {
  return member_codes(s, hasse_embedding(s, g).stacked_onto(g));
}

std::vector<CanonicalCode> zo_member_codes(const NodePoset& s, const Graph& g) {
  return member_codes(s, zero_one(s, g).stacked_onto(g));
}

void add_partition_examples(AuditResult& r, const PartitionCheck& pc, const auto& make) {
  for (const auto& [a, b] : pc.examples) {
    if (r.counterexamples.size() >= kExampleLimit) return;
    r.counterexamples.push_back(make(a, b));
  }
}

}  // namespace

namespace audit_detail {

std::string pooled_code(const Graph& g, const NodePoset& s) {
  const int k = static_cast<int>(s.size()) - 1;
  const NodePoset set = as_set(s);
  std::vector<std::string> parts;
  for (const auto& p : subsets_of(s.members(), k)) {
    parts.push_back(canonical_code(set, subset_zero_one(p, g).stacked_onto(g)).bytes);
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) out += std::to_string(p.size()) + ":" + p;
  return out;
}

bool subset_pooling_fails(const Graph& g1, const NodePoset& s1, const Graph& g2, const NodePoset& s2) {
  if (s1.size() != s2.size() || s1.size() < 2) return false;
  const int k = static_cast<int>(s1.size()) - 1;
  const bool pooled = subset_pooling_distinguishes(g1, as_set(s1), g2, as_set(s2), k, PoolingEngine::exact());
  const bool set = set_labeling_distinguishes(g1, as_set(s1), g2, as_set(s2), PoolingEngine::exact());
  return pooled != set;
}

bool poset_labeling_fails(const Graph& g1, const NodePoset& s1, const Graph& g2, const NodePoset& s2) {
  const bool iso = canonical_code(s1, g1) == canonical_code(s2, g2);
  return iso != (hasse_member_codes(s1, g1) == hasse_member_codes(s2, g2));
}

bool poset_soundness_fails(const Graph& g, const NodePoset& s1, const NodePoset& s2) {
  const NodeLabeling h1 = hasse_embedding(s1, g);
  const NodeLabeling h2 = hasse_embedding(s2, g);
  return are_substructures_isomorphic(s1, g, s2, g) && wl_distinguishes(g, &h1, s1, g, &h2, s2);
}

bool hypergraph_iso_fails(const Hypergraph& h1, const NodePoset& s1, const Hypergraph& h2, const NodePoset& s2) {
  const bool hyper = hypergraph_canonical_code(s1, h1) == hypergraph_canonical_code(s2, h2);
  const bool graph = canonical_code(s1, incidence_graph(h1)) == canonical_code(s2, incidence_graph(h2));
  return hyper != graph;
}

bool hypergraph_codes_fails(const Hypergraph& h1, const NodePoset& s1, const Hypergraph& h2, const NodePoset& s2) {
  const bool hyper = hypergraph_canonical_code(s1, h1) == hypergraph_canonical_code(s2, h2);
  const bool labeled = zo_member_codes(s1, incidence_graph(h1)) == zo_member_codes(s2, incidence_graph(h2));
  return hyper != labeled;
}

bool wl2_fails(const Graph& g1, const Graph& g2) {
  const LabeledGraph parts[] = {{&g1, nullptr}, {&g2, nullptr}};
  const TupleColoring tc = kwl_refine_joint(parts, 2);
  const bool two = tc.graph_colors[0] == tc.graph_colors[1];
  const bool one = !wl_distinguishes(g1, nullptr, NodePoset(), g2, nullptr, NodePoset(), Layers::converge(),
                                     Readout::whole_graph);
  return one != two;
}

bool kwl_pooling_fails(const Graph& g1, const Graph& g2, int k, int l) {
  const LabeledGraph parts[] = {{&g1, nullptr}, {&g2, nullptr}};
  const TupleColoring tc = kwl_refine_joint(parts, k);
  const Graph both[] = {g1, g2};
  const PooledColoring pc = kwl_l_pooling_joint(both, k, l);
  return (tc.graph_colors[0] == tc.graph_colors[1]) != (pc.graph_colors[0] == pc.graph_colors[1]);
}

bool klwl_order_fails(const Graph& g1, const std::vector<NodeId>& t1, const Graph& g2,
                       const std::vector<NodeId>& t2) {
  const bool kl_equal = kl_wl_tuples_equal(g1, t1, g2, t2, 2);
  const NodePoset s1 = NodePoset::chain(t1);
  const NodePoset s2 = NodePoset::chain(t2);
  const NodeLabeling l1 = linear_order_labels(s1, g1);
  const NodeLabeling l2 = linear_order_labels(s2, g2);
  const bool wl_equal = !wl_distinguishes(g1, &l1, s1, g2, &l2, s2, Layers::converge(), Readout::whole_graph);
  return kl_equal != wl_equal;
}

}  // namespace audit_detail

// ------------------------------------------------------------ subset pooling

AuditResult audit_subset_labeling(int n_max) {
  if (n_max > 6) throw InvalidArgument("subset audit enumerates graphs with at most 6 nodes");
  AuditResult r;
  r.claim = "subset";

  struct Inst {
    const Graph* g;
    NodePoset s;
  };
  std::vector<std::vector<Graph>> graphs;
  for (int n = 2; n <= n_max; ++n) graphs.push_back(enumerate_graphs(n, false, false));
  std::vector<Inst> inst;
  for (const auto& bucket : graphs)
    for (const Graph& g : bucket)
      for (int k : {2, 3})
        for (auto& m : subsets_of(all_nodes(g.size()), k)) inst.push_back({&g, NodePoset::set(m)});

  std::vector<std::string> pooled(inst.size());
  std::vector<std::vector<CanonicalCode>> set_codes(inst.size());
  std::vector<CanonicalCode> set_class(inst.size());
  std::vector<std::vector<std::pair<CanonicalCode, std::vector<NodeId>>>> per_subset(inst.size());
  detail::parallel_for(inst.size(), [&](std::size_t i) {
    const Graph& g = *inst[i].g;
    const NodePoset& s = inst[i].s;
    pooled[i] = pooled_code(g, s);
    set_codes[i] = zo_member_codes(s, g);
    set_class[i] = canonical_code(s, g);
    for (auto& p : subsets_of(s.members(), static_cast<int>(s.size()) - 1)) {
      per_subset[i].emplace_back(canonical_code(s, subset_zero_one(p, g).stacked_onto(g)), p);
    }
  });

  // Pooled oracle codes against set labeling oracle codes.
  const PartitionCheck pooled_check = compare_partitions(set_codes, pooled);
  r.instances += pooled_check.pairs;
  r.agreements += pooled_check.pairs - pooled_check.disagreements;
  add_partition_examples(r, pooled_check, [&](std::size_t a, std::size_t b) {
    return pair_instance("subset_pooling", *inst[a].g, inst[a].s, *inst[b].g, inst[b].s);
  });
  // Side check: set labeling codes against the set class itself.
  const PartitionCheck class_check = compare_partitions(set_class, set_codes);
  r.instances += class_check.pairs;
  r.agreements += class_check.pairs - class_check.disagreements;
  add_partition_examples(r, class_check, [&](std::size_t a, std::size_t b) {
    return pair_instance("set_iso", *inst[a].g, inst[a].s, *inst[b].g, inst[b].s);
  });

  // Single subset: code(S, A^(P)) determines the class of S for every choice of P.
  std::map<CanonicalCode, std::pair<std::size_t, std::size_t>> owner;  // code -> (instance, subset)
  std::size_t single_checks = 0, single_bad = 0;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    for (std::size_t p = 0; p < per_subset[i].size(); ++p) {
      ++single_checks;
      auto [it, fresh] = owner.try_emplace(per_subset[i][p].first, i, p);
      if (fresh) continue;
      const auto [j, q] = it->second;
      if (set_class[j] == set_class[i]) continue;
      ++single_bad;
      if (r.counterexamples.size() < kExampleLimit) {
        json c = pair_instance("subset_single", *inst[j].g, inst[j].s, *inst[i].g, inst[i].s);
        c["subset1"] = poset_to_json(NodePoset::set(per_subset[j][q].second));
        c["subset2"] = poset_to_json(NodePoset::set(per_subset[i][p].second));
        r.counterexamples.push_back(std::move(c));
      }
    }
  }
  r.instances += single_checks;
  r.agreements += single_checks - single_bad;

  // subset(1) with the oracle reads the labeled node alone and ties on C6.
  const Graph c6 = cycle_graph(6);
  const NodePoset link = NodePoset::set({0, 1}), non_link = NodePoset::set({0, 2});
  const bool cycle_tie = !subset_pooling_distinguishes(c6, link, c6, non_link, 1, PoolingEngine::exact(),
                                                     SubsetReadout::labeled_node) &&
                      !are_substructures_isomorphic(link, c6, non_link, c6);
  ++r.instances;
  if (cycle_tie) {
    ++r.agreements;
  } else {
    r.counterexamples.push_back(audit_rerun("subset", json::object(), "6-cycle subset(1) tie not exhibited"));
  }

  // Both separation directions, from the verified gallery.
  std::size_t set_wins = 0, subset_wins = 0;
  try {
    for (const auto& g : gallery()) {
      const auto live = evaluate_gallery_instance(g);
      if (live[1] && !live[2]) ++set_wins;
      if (!live[1] && live[2]) ++subset_wins;
    }
  } catch (const ValidationError& e) {
    r.counterexamples.push_back(audit_rerun("subset", json::object(), std::string("gallery: ") + e.what()));
  }
  ++r.instances;
  if (set_wins > 0 && subset_wins > 0) {
    ++r.agreements;
  } else {
    r.counterexamples.push_back(audit_rerun("subset", json::object(), "gallery lacks a separation direction"));
  }

  r.details["targets"] = inst.size();
  r.details["pooling_pairs"] = pooled_check.pairs;
  r.details["pooling_disagreements"] = pooled_check.disagreements;
  r.details["single_subset_checks"] = single_checks;
  r.details["single_subset_violations"] = single_bad;
  r.details["cycle_triangles_exhibited"] = cycle_tie;
  r.details["set_beats_subset"] = set_wins;
  r.details["subset_beats_set"] = subset_wins;
  r.details["n_max"] = n_max;
  return r;
}

// --------------------------------------------------------------------- posets

AuditResult audit_poset(int n_max) {
  if (n_max > 4) throw InvalidArgument("directed graphs are enumerated up to 4 nodes");
  AuditResult r;
  r.claim = "poset";

  // Orientation of links on directed graphs.
  std::size_t orientation_pairs = 0, exhibited = 0;
  json examples = json::array();
  for (int n = 2; n <= n_max; ++n) {
    for (bool directed : {true, false}) {
      for (const Graph& g : enumerate_graphs(n, directed, false)) {
        for (NodeId u = 0; u < n; ++u) {
          for (NodeId v = u + 1; v < n; ++v) {
            ++orientation_pairs;
            const NodePoset a = NodePoset::chain({u, v});
            const NodePoset b = NodePoset::chain({v, u});
            const bool iso = are_substructures_isomorphic(a, g, b, g);
            const NodeLabeling za = zero_one(a, g), zb = zero_one(b, g);
            const bool set_sep = wl_distinguishes(g, &za, a, g, &zb, b);
            const NodeLabeling ha = hasse_embedding(a, g), hb = hasse_embedding(b, g);
            const bool hasse_sep = wl_distinguishes(g, &ha, a, g, &hb, b);
            ++r.instances;
            if (iso && (hasse_sep || set_sep)) {
              if (r.counterexamples.size() < kExampleLimit) {
                json c = pair_instance("poset_soundness", g, a, g, b);
                r.counterexamples.push_back(std::move(c));
              }
              continue;
            }
            ++r.agreements;
            if (directed && !iso && !set_sep && hasse_sep) {
              ++exhibited;
              if (examples.size() < 10) examples.push_back(pair_instance("poset_orientation", g, a, g, b));
            }
          }
        }
      }
    }
  }
  if (exhibited < 10) {
    r.counterexamples.push_back(audit_rerun("poset", json{{"n_max", n_max}},
                                            "only " + std::to_string(exhibited) + " orientation separations"));
  }

  // Hasse-labeled codes on every poset of size <= 3.
  struct Inst {
    const Graph* g;
    NodePoset s;
  };
  std::vector<std::vector<Graph>> graphs;
  for (int n = 1; n <= n_max; ++n) {
    graphs.push_back(enumerate_graphs(n, true, false));
    graphs.push_back(enumerate_graphs(n, false, false));
  }
  std::vector<Inst> inst;
  for (const auto& bucket : graphs)
    for (const Graph& g : bucket)
      for (int k = 1; k <= std::min(3, g.size()); ++k)
        for (auto& m : subsets_of(all_nodes(g.size()), k))
          for (auto& p : all_posets(m)) inst.push_back({&g, std::move(p)});
  std::vector<CanonicalCode> truth(inst.size());
  std::vector<std::vector<CanonicalCode>> claim(inst.size());
  detail::parallel_for(inst.size(), [&](std::size_t i) {
    truth[i] = canonical_code(inst[i].s, *inst[i].g);
    claim[i] = hasse_member_codes(inst[i].s, *inst[i].g);
  });
  const PartitionCheck hasse_check = compare_partitions(truth, claim);
  r.instances += hasse_check.pairs;
  r.agreements += hasse_check.pairs - hasse_check.disagreements;
  add_partition_examples(r, hasse_check, [&](std::size_t a, std::size_t b) {
    return pair_instance("poset_labeling", *inst[a].g, inst[a].s, *inst[b].g, inst[b].s);
  });

  r.details["orientation_pairs"] = orientation_pairs;
  r.details["orientation_separations"] = exhibited;
  r.details["examples"] = std::move(examples);
  r.details["hasse_targets"] = inst.size();
  r.details["hasse_pairs"] = hasse_check.pairs;
  r.details["hasse_disagreements"] = hasse_check.disagreements;
  return r;
}

// ---------------------------------------------------------------- hypergraphs

namespace {

/// Hypergraphs as multisets of nonempty node masks, every size up to m_max.
std::vector<Hypergraph> enumerate_hypergraphs(int n, int m_max) {
  std::vector<Hypergraph> out;
  const int masks = (1 << n) - 1;
  std::vector<int> pick;
  auto emit = [&] {
    std::vector<std::vector<NodeId>> edges;
    for (int mask : pick) {
      std::vector<NodeId> e;
      for (int v = 0; v < n; ++v)
        if (mask >> v & 1) e.push_back(v);
      edges.push_back(std::move(e));
    }
    out.emplace_back(n, std::move(edges));
  };
  auto rec = [&](auto&& self, int from) -> void {
    emit();
    if (static_cast<int>(pick.size()) == m_max) return;
    for (int mask = from; mask <= masks; ++mask) {
      pick.push_back(mask);
      self(self, mask);
      pick.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace

AuditResult audit_hypergraph(int n_max, int m_max) {
  if (n_max > 4 || m_max > 3) throw InvalidArgument("hypergraph audit is bounded by n <= 4 and m <= 3");
  AuditResult r;
  r.claim = "hypergraph";
  struct Inst {
    const Hypergraph* h;
    NodePoset s;
  };
  std::vector<std::vector<Hypergraph>> hs;
  for (int n = 1; n <= n_max; ++n) hs.push_back(enumerate_hypergraphs(n, m_max));
  std::vector<Inst> inst;
  std::size_t hypergraphs = 0;
  for (const auto& bucket : hs) {
    for (const Hypergraph& h : bucket) {
      ++hypergraphs;
      for (int k = 0; k <= std::min(2, h.num_nodes()); ++k)
        for (auto& m : subsets_of(all_nodes(h.num_nodes()), k))
          for (auto& p : all_posets(m)) inst.push_back({&h, std::move(p)});
    }
  }
  std::vector<CanonicalCode> hyper(inst.size()), incidence(inst.size());
  std::vector<std::vector<CanonicalCode>> labeled(inst.size());
  detail::parallel_for(inst.size(), [&](std::size_t i) {
    const Graph ig = incidence_graph(*inst[i].h);
    hyper[i] = hypergraph_canonical_code(inst[i].s, *inst[i].h);
    incidence[i] = canonical_code(inst[i].s, ig);
    if (inst[i].s.is_set() && !inst[i].s.empty()) labeled[i] = zo_member_codes(inst[i].s, ig);
  });
  const PartitionCheck iso_check = compare_partitions(hyper, incidence);
  r.instances += iso_check.pairs;
  r.agreements += iso_check.pairs - iso_check.disagreements;
  add_partition_examples(r, iso_check, [&](std::size_t a, std::size_t b) {
    return json{{"kind", "hypergraph_iso"},
                {"hypergraph1", hypergraph_to_json(*inst[a].h)},
                {"target1", poset_to_json(inst[a].s)},
                {"hypergraph2", hypergraph_to_json(*inst[b].h)},
                {"target2", poset_to_json(inst[b].s)}};
  });

  // Set targets: zero-one labels on the incidence graph.
  std::vector<std::size_t> sets;
  for (std::size_t i = 0; i < inst.size(); ++i)
    if (inst[i].s.is_set() && !inst[i].s.empty()) sets.push_back(i);
  std::vector<CanonicalCode> set_hyper;
  std::vector<std::vector<CanonicalCode>> set_labeled;
  for (std::size_t i : sets) {
    set_hyper.push_back(hyper[i]);
    set_labeled.push_back(labeled[i]);
  }
  // Set sizes must match for member codes to be comparable as a claim; the
  // hypergraph code already separates different sizes, and so do the multisets.
  const PartitionCheck codes_check = compare_partitions(set_hyper, set_labeled);
  r.instances += codes_check.pairs;
  r.agreements += codes_check.pairs - codes_check.disagreements;
  add_partition_examples(r, codes_check, [&](std::size_t a, std::size_t b) {
    const auto& x = inst[sets[a]];
    const auto& y = inst[sets[b]];
    return json{{"kind", "hypergraph_codes"},
                {"hypergraph1", hypergraph_to_json(*x.h)},
                {"target1", poset_to_json(x.s)},
                {"hypergraph2", hypergraph_to_json(*y.h)},
                {"target2", poset_to_json(y.s)}};
  });

  r.details["hypergraphs"] = hypergraphs;
  r.details["targets"] = inst.size();
  r.details["hypergraph_iso_pairs"] = iso_check.pairs;
  r.details["hypergraph_iso_disagreements"] = iso_check.disagreements;
  r.details["hypergraph_codes_pairs"] = codes_check.pairs;
  r.details["hypergraph_codes_disagreements"] = codes_check.disagreements;
  return r;
}

// ------------------------------------------------------------------ hierarchy

namespace {

Graph random_graph_for_budget(int n, Rng& rng) { return erdos_renyi(n, 0.2 + 0.5 * uniform_unit(rng), false, rng); }

std::pair<Graph, Graph> sample_graph_pair(int n, Rng& rng) {
  const double kind = uniform_unit(rng);
  const Graph a = random_graph_for_budget(n, rng);
  if (kind < 1.0 / 3) return {a, apply_permutation(a, Permutation::random(n, rng))};
  if (kind < 2.0 / 3 && n >= 6) {
    // 1-WL-equivalent but often non-isomorphic: two 2-regular graphs.
    const int split = 3 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n - 5)));
    Graph b = n - split >= 3 ? disjoint_union(cycle_graph(split), cycle_graph(n - split)) : cycle_graph(n);
    return {cycle_graph(n), apply_permutation(b, Permutation::random(n, rng))};
  }
  return {a, random_graph_for_budget(n, rng)};
}

}  // namespace

AuditResult audit_wl_hierarchy(int n_max, int samples, std::uint64_t seed) {
  if (n_max > 6) throw InvalidArgument("hierarchy audit enumerates graphs with at most 6 nodes");
  AuditResult r;
  r.claim = "hierarchy";

  // 2-WL against 1-WL on every graph, one joint run per n.
  std::size_t wl2_pairs = 0, wl2_bad = 0;
  for (int n = 1; n <= n_max; ++n) {
    const std::vector<Graph> graphs = enumerate_graphs(n, false, false);
    std::vector<LabeledGraph> parts;
    for (const Graph& g : graphs) parts.push_back({&g, nullptr});
    const TupleColoring tc = kwl_refine_joint(parts, 2);
    auto one = joint_refine(parts, Layers::converge());
    for (auto& c : one) std::sort(c.begin(), c.end());
    const PartitionCheck pc = compare_partitions(one, tc.graph_colors);
    wl2_pairs += pc.pairs;
    wl2_bad += pc.disagreements;
    for (const auto& [a, b] : pc.examples) {
      if (r.counterexamples.size() >= kExampleLimit) break;
      r.counterexamples.push_back(json{{"kind", "wl2"}, {"graph1", graph_to_json(graphs[a])}, {"graph2", graph_to_json(graphs[b])}});
    }
  }
  r.instances += wl2_pairs;
  r.agreements += wl2_pairs - wl2_bad;

  // k-WL against k-WL with l-pooling.
  Rng rng(seed ^ 0x6869657261726368ULL);
  std::size_t pool_bad = 0, pool_equal = 0;
  for (int t = 0; t < samples; ++t) {
    const int k = t % 2 == 0 ? 2 : 3;
    const int l = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(k - 1)));
    const int n = k == 2 ? 4 + static_cast<int>(uniform_below(rng, 5)) : 4 + static_cast<int>(uniform_below(rng, 3));
    const auto [g1, g2] = sample_graph_pair(n, rng);
    ++r.instances;
    const LabeledGraph parts[] = {{&g1, nullptr}, {&g2, nullptr}};
    const TupleColoring tc = kwl_refine_joint(parts, k);
    const Graph both[] = {g1, g2};
    const PooledColoring pc = kwl_l_pooling_joint(both, k, l);
    const bool plain = tc.graph_colors[0] == tc.graph_colors[1];
    pool_equal += plain;
    if (plain == (pc.graph_colors[0] == pc.graph_colors[1])) {
      ++r.agreements;
    } else {
      ++pool_bad;
      if (r.counterexamples.size() < kExampleLimit) {
        r.counterexamples.push_back(json{{"kind", "kwl_pooling"},
                                         {"graph1", graph_to_json(g1)},
                                         {"graph2", graph_to_json(g2)},
                                         {"k", k},
                                         {"l", l}});
      }
    }
  }

  // k,l-WL tuple colors against linear order labels plus 1-WL.
  std::size_t order_bad = 0, order_equal = 0;
  for (int t = 0; t < samples; ++t) {
    const int n = 3 + static_cast<int>(uniform_below(rng, 6));
    const int len = t % 4 == 3 ? 1 : 2;
    Graph g1 = random_graph_for_budget(n, rng);
    std::vector<NodeId> t1 = random_subset(n, len, rng);
    if (len == 2 && uniform_unit(rng) < 0.5) std::swap(t1[0], t1[1]);
    Graph g2;
    std::vector<NodeId> t2;
    const double kind = uniform_unit(rng);
    if (kind < 0.3) {
      const Permutation pi = Permutation::random(n, rng);
      g2 = apply_permutation(g1, pi);
      for (NodeId v : t1) t2.push_back(pi(v));
    } else if (kind < 0.7) {
      g2 = g1;
      t2 = random_subset(n, len, rng);
      if (len == 2 && uniform_unit(rng) < 0.5) std::swap(t2[0], t2[1]);
    } else {
      g2 = random_graph_for_budget(n, rng);
      t2 = random_subset(n, len, rng);
    }
    ++r.instances;
    const bool bad = klwl_order_fails(g1, t1, g2, t2);
    order_equal += kl_wl_tuples_equal(g1, t1, g2, t2, 2);
    if (!bad) {
      ++r.agreements;
      continue;
    }
    ++order_bad;
    if (r.counterexamples.size() < kExampleLimit) {
      r.counterexamples.push_back(json{{"kind", "klwl_order"},
                                       {"graph1", graph_to_json(g1)},
                                       {"tuple1", poset_to_json(NodePoset::chain(t1))},
                                       {"graph2", graph_to_json(g2)},
                                       {"tuple2", poset_to_json(NodePoset::chain(t2))}});
    }
  }

  r.details["wl2_pairs"] = wl2_pairs;
  r.details["wl2_disagreements"] = wl2_bad;
  r.details["kwl_pooling_samples"] = samples;
  r.details["kwl_pooling_equal_pairs"] = pool_equal;
  r.details["kwl_pooling_disagreements"] = pool_bad;
  r.details["klwl_order_samples"] = samples;
  r.details["klwl_order_equal_pairs"] = order_equal;
  r.details["klwl_order_disagreements"] = order_bad;
  return r;
}

// --------------------------------------------------------------------- tricks

AuditResult audit_tricks(int trials, int n_max, std::uint64_t seed) {
  AuditResult r;
  r.claim = "tricks";
  json per = json::object();
  for (Trick t : all_tricks()) {
    const ValidationReport rep = validate_labeling_trick(trick_under_test(t), trials, n_max, seed);
    r.instances += static_cast<std::size_t>(rep.trials);
    r.agreements += static_cast<std::size_t>(rep.trials - std::min(rep.trials, rep.equivariance_violations + rep.distinguishing_violations));
    per[rep.trick] = json{{"trials", rep.trials},
                          {"equivariance_violations", rep.equivariance_violations},
                          {"distinguishing_checks", rep.distinguishing_checks},
                          {"distinguishing_violations", rep.distinguishing_violations}};
    if (!rep.passed()) {
      r.counterexamples.push_back(json{{"kind", "trick"},
                                       {"trick", rep.trick},
                                       {"trials", trials},
                                       {"n_max", n_max},
                                       {"seed", seed},
                                       {"examples", rep.counterexamples}});
    }
  }
  r.details["tricks"] = std::move(per);
  return r;
}

// --------------------------------------------------------------------- replay

bool replay_counterexample(const json& c) {
  const std::string kind = c.at("kind").get<std::string>();
  auto g = [&](const char* key) { return graph_from_json(c.at(key)); };
  auto s = [&](const char* key) { return poset_from_json(c.at(key)); };
  auto h = [&](const char* key) { return hypergraph_from_json(c.at(key)); };
  if (kind == "set_iso") return set_iso_fails(g("graph1"), s("target1"), g("graph2"), s("target2"));
  if (kind == "gae_soundness") return gae_soundness_fails(g("graph1"), s("target1"), g("graph2"), s("target2"));
  if (kind == "gae_complete_graph" || kind == "gae_failure") {
    const Graph g1 = g("graph1"), g2 = g("graph2");
    const NodePoset s1 = s("target1"), s2 = s("target2");
    return member_codes(s1, g1) == member_codes(s2, g2) && !are_substructures_isomorphic(s1, g1, s2, g2);
  }
  if (kind == "boost_zero") return count_boosted_link_pairs(g("graph"), c.at("depth").get<int>()).count == 0;
  if (kind == "subset_pooling") return subset_pooling_fails(g("graph1"), s("target1"), g("graph2"), s("target2"));
  if (kind == "subset_single") {
    const Graph g1 = g("graph1"), g2 = g("graph2");
    const NodePoset s1 = s("target1"), s2 = s("target2");
    const auto p1 = s("subset1").members(), p2 = s("subset2").members();
    return canonical_code(s1, subset_zero_one(p1, g1).stacked_onto(g1)) ==
               canonical_code(s2, subset_zero_one(p2, g2).stacked_onto(g2)) &&
           !are_substructures_isomorphic(s1, g1, s2, g2);
  }
  if (kind == "poset_labeling") return poset_labeling_fails(g("graph1"), s("target1"), g("graph2"), s("target2"));
  if (kind == "poset_soundness") {
    const Graph g1 = g("graph1");
    const NodePoset a = s("target1"), b = s("target2");
    const NodeLabeling za = zero_one(a, g1), zb = zero_one(b, g1);
    return poset_soundness_fails(g1, a, b) ||
           (are_substructures_isomorphic(a, g1, b, g1) && wl_distinguishes(g1, &za, a, g1, &zb, b));
  }
  if (kind == "hypergraph_iso") return hypergraph_iso_fails(h("hypergraph1"), s("target1"), h("hypergraph2"), s("target2"));
  if (kind == "hypergraph_codes") return hypergraph_codes_fails(h("hypergraph1"), s("target1"), h("hypergraph2"), s("target2"));
  if (kind == "wl2") return wl2_fails(g("graph1"), g("graph2"));
  if (kind == "kwl_pooling") return kwl_pooling_fails(g("graph1"), g("graph2"), c.at("k").get<int>(), c.at("l").get<int>());
  if (kind == "klwl_order") {
    return klwl_order_fails(g("graph1"), chain_order(s("tuple1")), g("graph2"), chain_order(s("tuple2")));
  }
  if (kind == "trick") {
    const Trick t = parse_trick(c.at("trick").get<std::string>());
    return !validate_labeling_trick(trick_under_test(t), c.at("trials").get<int>(), c.at("n_max").get<int>(),
                                    c.at("seed").get<std::uint64_t>())
                .passed();
  }
  if (kind == "gallery") {
    try {
      gallery_from_json(json::array({c.at("instance")}));
    } catch (const ValidationError&) {
      return true;
    }
    return false;
  }
  if (kind == "audit") {
    AuditConfig cfg;
    const json& p = c.value("params", json::object());
    cfg.seed = p.value("seed", std::uint64_t{0});
    cfg.n_max = p.value("n_max", cfg.n_max);
    for (const auto& res : run_audit(c.at("claim").get<std::string>(), cfg))
      if (!res.passed()) return true;
    return false;
  }
  throw InvalidArgument("unknown counterexample kind '" + kind + "'");
}

}  // namespace labelkit
