#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "audit_internal.hpp"
#include "labelkit/detail/parallel.hpp"
#include "labelkit/errors.hpp"
#include "labelkit/generators.hpp"
#include "labelkit/structure.hpp"

namespace labelkit {

using namespace audit_detail;

json AuditResult::to_json() const {
  return json{{"claim", claim},
              {"verdict", verdict()},
              {"instances", instances},
              {"agreements", agreements},
              {"counterexamples", counterexamples},
              {"details", details}};
}

namespace audit_detail {

bool set_iso_fails(const Graph& g1, const NodePoset& s1, const Graph& g2, const NodePoset& s2) {
  const bool iso = are_substructures_isomorphic(s1, g1, s2, g2);
  const Graph a = zo(s1, g1).stacked_onto(g1);
  const Graph b = zo(s2, g2).stacked_onto(g2);
  const bool labeled_equal = canonical_code(NodePoset(), a) == canonical_code(NodePoset(), b);
  const bool members_equal = member_codes(s1, a) == member_codes(s2, b);
  return labeled_equal != iso || members_equal != iso;
}

bool gae_soundness_fails(const Graph& g1, const NodePoset& s1, const Graph& g2, const NodePoset& s2) {
  return member_codes(s1, g1) != member_codes(s2, g2) && are_substructures_isomorphic(s1, g1, s2, g2);
}

}  // namespace audit_detail

// ---------------------------------------------------------- set isomorphism

namespace {

struct SetInstance {
  const Graph* graph;
  NodePoset target;
};

Graph random_connected(int n, Rng& rng) {
  for (;;) {
    const double p = 0.3 + 0.4 * uniform_unit(rng);
    Graph g = erdos_renyi(n, p, false, rng);
    if (is_connected(g)) return g;
  }
}

std::vector<std::vector<NodeId>> all_subsets_of_size(int n, int k) {
  std::vector<std::vector<NodeId>> out;
  if (k > n) return out;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    out.emplace_back(idx.begin(), idx.end());
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return out;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

AuditResult audit_set_isomorphism(int n_max, std::vector<int> set_sizes, std::size_t sampled_pairs, std::uint64_t seed) {
  if (n_max > 8) throw InvalidArgument("set isomorphism audit is bounded by the oracle at n = 8");
  AuditResult r;
  r.claim = "set_iso";
  r.details["set_sizes"] = set_sizes;
  r.details["n_max"] = n_max;
  std::size_t labeled_agree = 0, codes_agree = 0;

  for (int n = 1; n <= std::min(n_max, 5); ++n) {
    const std::vector<Graph> graphs = enumerate_graphs(n, false, true);
    for (int k : set_sizes) {
      if (k > n) continue;
      std::vector<SetInstance> inst;
      for (const Graph& g : graphs)
        for (auto& m : all_subsets_of_size(n, k)) inst.push_back({&g, NodePoset::set(m)});
      std::vector<CanonicalCode> labeled(inst.size());
      std::vector<std::vector<CanonicalCode>> members(inst.size());
      detail::parallel_for(inst.size(), [&](std::size_t i) {
        const Graph a = zo(inst[i].target, *inst[i].graph).stacked_onto(*inst[i].graph);
        labeled[i] = canonical_code(NodePoset(), a);
        members[i] = member_codes(inst[i].target, a);
      });
      // Ground truth by pairwise backtracking.
      const std::size_t count = inst.size();
      std::vector<std::size_t> row_agree(count, 0), row_graph(count, 0), row_nodes(count, 0);
      std::vector<std::vector<std::size_t>> row_bad(count);
      detail::parallel_for(count, [&](std::size_t i) {
        for (std::size_t j = i + 1; j < count; ++j) {
          const bool iso = are_substructures_isomorphic(inst[i].target, *inst[i].graph, inst[j].target, *inst[j].graph);
          const bool graph_ok = (labeled[i] == labeled[j]) == iso;
          const bool nodes_ok = (members[i] == members[j]) == iso;
          row_graph[i] += graph_ok;
          row_nodes[i] += nodes_ok;
          if (graph_ok && nodes_ok) {
            ++row_agree[i];
          } else if (row_bad[i].size() < 2) {
            row_bad[i].push_back(j);
          }
        }
      });
      for (std::size_t i = 0; i < count; ++i) {
        r.instances += count - i - 1;
        r.agreements += row_agree[i];
        labeled_agree += row_graph[i];
        codes_agree += row_nodes[i];
        for (std::size_t j : row_bad[i]) {
          if (r.counterexamples.size() < kExampleLimit) {
            r.counterexamples.push_back(
                pair_instance("set_iso", *inst[i].graph, inst[i].target, *inst[j].graph, inst[j].target));
          }
        }
      }
    }
  }

  // Sampled part above the exhaustive range.
  Rng rng(seed ^ 0x7468656f72656d31ULL);
  std::size_t planted = 0;
  for (int n = 6; n <= n_max; ++n) {
    for (std::size_t t = 0; t < sampled_pairs; ++t) {
      const int k = set_sizes[uniform_below(rng, set_sizes.size())];
      if (k > n) continue;
      const Graph g1 = random_connected(n, rng);
      const NodePoset s1 = NodePoset::set(random_subset(n, k, rng));
      Graph g2;
      NodePoset s2;
      if (uniform_unit(rng) < 0.5) {
        const Permutation pi = Permutation::random(n, rng);
        g2 = apply_permutation(g1, pi);
        s2 = s1.permuted(pi);
        ++planted;
      } else {
        g2 = random_connected(n, rng);
        s2 = NodePoset::set(random_subset(n, k, rng));
      }
      ++r.instances;
      if (set_iso_fails(g1, s1, g2, s2)) {
        if (r.counterexamples.size() < kExampleLimit) r.counterexamples.push_back(pair_instance("set_iso", g1, s1, g2, s2));
      } else {
        ++r.agreements;
        ++labeled_agree;
        ++codes_agree;
      }
    }
  }
  r.details["labeled_graph_agreements"] = labeled_agree;
  r.details["node_code_agreements"] = codes_agree;
  r.details["planted_isomorphic_pairs"] = planted;
  r.details["exhaustive_up_to"] = std::min(n_max, 5);
  return r;
}

// ---------------------------------------------------------- GAE failure

std::vector<SetPairInstance> gae_instances(int n_max) {
  std::vector<SetPairInstance> out;
  const Graph c6 = cycle_graph(6);
  out.push_back({"C6 {1,2} vs {1,3}", c6, NodePoset::set({0, 1}), c6, NodePoset::set({0, 2})});
  for (int n = 2; n <= std::min(n_max, 5); ++n) {
    const auto graphs = enumerate_graphs(n, false, true);
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
      const auto pairs = all_subsets_of_size(n, 2);
      for (std::size_t a = 0; a < pairs.size(); ++a) {
        for (std::size_t b = a + 1; b < pairs.size(); ++b) {
          out.push_back({"n=" + std::to_string(n) + " graph " + std::to_string(gi), graphs[gi],
                         NodePoset::set(pairs[a]), graphs[gi], NodePoset::set(pairs[b])});
        }
      }
    }
  }
  const Graph k5 = complete_graph(5);
  out.push_back({"K5 {1,2} vs {3,4}", k5, NodePoset::set({0, 1}), k5, NodePoset::set({2, 3})});
  return out;
}

AuditResult audit_gae_failure(const std::vector<SetPairInstance>& instances) {
  AuditResult r;
  r.claim = "gae";
  std::vector<char> tie(instances.size()), iso(instances.size());
  detail::parallel_for(instances.size(), [&](std::size_t i) {
    const auto& x = instances[i];
    tie[i] = member_codes(x.s1, x.g1) == member_codes(x.s2, x.g2);
    iso[i] = are_substructures_isomorphic(x.s1, x.g1, x.s2, x.g2);
  });
  json exhibited = json::array();
  std::size_t failures = 0;
  bool c6_seen = false;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& x = instances[i];
    ++r.instances;
    if (!tie[i] && iso[i]) {
      r.counterexamples.push_back(pair_instance("gae_soundness", x.g1, x.s1, x.g2, x.s2));
      continue;
    }
    ++r.agreements;
    if (tie[i] && !iso[i]) {
      ++failures;
      if (x.name.rfind("C6", 0) == 0) c6_seen = true;
      if (exhibited.size() < 10) exhibited.push_back(pair_instance("gae_failure", x.g1, x.s1, x.g2, x.s2));
    }
    if (x.name.rfind("K", 0) == 0 && tie[i] && !iso[i]) {
      r.counterexamples.push_back(pair_instance("gae_complete_graph", x.g1, x.s1, x.g2, x.s2));
    }
  }
  if (!c6_seen) r.counterexamples.push_back(audit_rerun("gae", json::object(), "6-cycle pair not exhibited"));
  r.details["failures_exhibited"] = failures;
  r.details["c6_exhibited"] = c6_seen;
  r.details["examples"] = std::move(exhibited);
  return r;
}

// ------------------------------------------------------------ boosted pairs

BoostCount count_boosted_link_pairs(const Graph& g, int depth, BoostLabeling labeling, std::size_t listing_limit) {
  if (depth < 1) throw InvalidArgument("depth must be positive");
  BoostCount out;
  out.n = g.size();
  out.depth = depth;
  const int n = g.size();
  for (NodeId v = 0; v < n; ++v) out.max_degree = std::max(out.max_degree, g.degree(v));
  if (n >= 3) {
    const double ln = std::log(static_cast<double>(n));
    const double eps_min = std::log(ln) / ((2.0 * depth + 2.0) * ln);
    out.degree_bound = std::pow((1.0 - eps_min) * ln, 1.0 / (2.0 * depth + 2.0));
    bool ok = true;
    for (NodeId v = 0; v < n; ++v) ok = ok && g.degree(v) >= 1 && g.degree(v) <= out.degree_bound;
    out.degree_condition = ok;
  }

  const auto vanilla = wl_refine(g, nullptr, Layers::fixed(depth)).final_colors();
  std::map<int, std::vector<NodeId>> classes;
  for (NodeId v = 0; v < n; ++v) classes[vanilla[v]].push_back(v);

  ColorTable table;
  // key[x][w] for x in a class with at least two members.
  std::vector<std::vector<std::vector<int>>> key(n);
  auto link_colors = [&](const EnclosingSubgraph& sub, std::span<const NodeId> labeled, int lx, int lw) {
    const NodeLabeling l = subset_zero_one(labeled, sub.graph);
    const auto c = wl_refine_shared(table, sub.graph, &l, depth).final_colors();
    return std::array<int, 2>{std::min(c[lx], c[lw]), std::max(c[lx], c[lw])};
  };
  for (const auto& [color, members] : classes) {
    if (members.size() < 2) continue;
    for (NodeId x : members) {
      key[x].assign(n, {});
      for (NodeId w = 0; w < n; ++w) {
        if (w == x) continue;
        const EnclosingSubgraph sub = enclosing_subgraph(g, NodePoset::set({x, w}), depth);
        const int lx = static_cast<int>(std::lower_bound(sub.nodes.begin(), sub.nodes.end(), x) - sub.nodes.begin());
        const int lw = static_cast<int>(std::lower_bound(sub.nodes.begin(), sub.nodes.end(), w) - sub.nodes.begin());
        std::vector<int> k;
        if (labeling == BoostLabeling::zero_one) {
          const auto a = link_colors(sub, std::array{lx, lw}, lx, lw);
          k = {a[0], a[1]};
        } else {
          auto a = link_colors(sub, std::array{lx}, lx, lw);
          auto b = link_colors(sub, std::array{lw}, lx, lw);
          if (b < a) std::swap(a, b);
          k = {a[0], a[1], b[0], b[1]};
        }
        key[x][w] = std::move(k);
      }
    }
  }
  for (const auto& [color, members] : classes) {
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        const NodeId u = members[a], v = members[b];
        for (NodeId w = 0; w < n; ++w) {
          if (w == u || w == v || key[u][w] == key[v][w]) continue;
          ++out.count;
          if (out.listing.size() < listing_limit) out.listing.push_back({u, v, w});
        }
      }
    }
  }
  return out;
}

AuditResult audit_boost_trend(std::vector<int> sizes, int seeds, int max_degree, int depth, std::uint64_t seed) {
  AuditResult r;
  r.claim = "boost";
  std::sort(sizes.begin(), sizes.end());
  json table = json::array();
  bool condition_met = true;
  for (int s = 0; s < seeds; ++s) {
    std::vector<std::size_t> counts;
    json row = json::object();
    row["seed"] = s;
    for (int n : sizes) {
      Rng rng(seed * 1000003ULL + static_cast<std::uint64_t>(s) * 7919ULL + static_cast<std::uint64_t>(n));
      const Graph g = random_bounded_degree(n, max_degree, rng);
      const BoostCount c = count_boosted_link_pairs(g, depth);
      counts.push_back(c.count);
      row["counts"].push_back(c.count);
      row["degree_bound"].push_back(c.degree_bound);
      row["max_degree"].push_back(c.max_degree);
      condition_met = condition_met && c.degree_condition;
      ++r.instances;
      if (c.count > 0) {
        ++r.agreements;
      } else {
        r.counterexamples.push_back(json{{"kind", "boost_zero"}, {"graph", graph_to_json(g)}, {"depth", depth}});
      }
    }
    for (std::size_t i = 1; i < counts.size(); ++i) {
      if (counts[i] < counts[i - 1]) {
        r.counterexamples.push_back(audit_rerun("boost", json{{"seed", seed}}, "count decreased from n=" +
                                                                                   std::to_string(sizes[i - 1]) +
                                                                                   " to n=" + std::to_string(sizes[i]) +
                                                                                   " for seed " + std::to_string(s)));
      }
    }
    table.push_back(std::move(row));
  }
  r.details["sizes"] = sizes;
  r.details["depth"] = depth;
  r.details["max_degree"] = max_degree;
  r.details["table"] = std::move(table);
  r.details["degree_condition_met"] = condition_met;
  return r;
}

// --------------------------------------------------------------- heuristics

AuditResult audit_heuristics(std::size_t pair_pairs, int depth, std::uint64_t seed) {
  AuditResult r;
  r.claim = "heuristics";
  Rng rng(seed ^ 0x6865757269737469ULL);
  std::vector<Graph> graphs;
  graphs.push_back(cycle_graph(6));
  graphs.push_back(cycle_graph(8));
  graphs.push_back(cycle_graph(12));
  graphs.push_back(random_regular(20, 3, rng));
  graphs.push_back(random_regular(24, 3, rng));
  graphs.push_back(random_regular(30, 4, rng));
  for (int t = 0; t < 6; ++t) {
    const int n = 10 + static_cast<int>(uniform_below(rng, 31));
    graphs.push_back(erdos_renyi(n, 3.0 / n + 0.1 * uniform_unit(rng), false, rng));
  }
  for (int t = 0; t < 3; ++t) graphs.push_back(random_bounded_degree(40, 3, rng));
  std::vector<PairRef> targets;
  for (std::size_t gi = 0; gi < graphs.size(); ++gi)
    for (NodeId i = 0; i < graphs[gi].size(); ++i)
      for (NodeId j = i + 1; j < graphs[gi].size(); ++j) targets.push_back({gi, i, j});

  const HeuristicCheckReport rep = heuristic_refinement_check(graphs, targets, depth, pair_pairs, seed);
  r.instances = rep.pair_pairs + rep.class_pairs;
  r.agreements = r.instances - rep.violations;
  for (const auto& d : rep.violation_details) r.counterexamples.push_back(json{{"kind", "heuristic"}, {"detail", d}});

  // The 6-cycle witness: links (1,2) and (1,3) tie without labels, CN 1 vs 0.
  bool c6_witness = false;
  json witnesses = json::array();
  for (const auto& [a, b] : rep.unlabeled_witnesses) {
    if (a.graph == 0 && b.graph == 0) c6_witness = true;
    witnesses.push_back(json{{"cn1", {a.graph, a.i + 1, a.j + 1}}, {"cn0", {b.graph, b.i + 1, b.j + 1}}});
  }
  if (!c6_witness) r.counterexamples.push_back(audit_rerun("heuristics", json::object(), "no 6-cycle witness"));
  r.details["graphs"] = graphs.size();
  r.details["targets"] = rep.targets;
  r.details["sampled_pair_pairs"] = rep.pair_pairs;
  r.details["sampled_labeled_equal"] = rep.labeled_equal;
  r.details["class_pairs"] = rep.class_pairs;
  r.details["violations"] = rep.violations;
  r.details["unlabeled_witnesses"] = std::move(witnesses);
  r.details["depth"] = depth;
  return r;
}

// ------------------------------------------------------------------- driver

std::vector<std::string> audit_claims() {
  return {"set_iso", "gae", "boost", "heuristics", "subset", "poset", "hypergraph", "hierarchy", "tricks"};
}

std::vector<AuditResult> run_audit(const std::string& claim, const AuditConfig& cfg) {
  const auto claims = audit_claims();
  if (claim != "all" && std::find(claims.begin(), claims.end(), claim) == claims.end()) {
    std::string names;
    for (const auto& c : claims) names += c + " ";
    throw InvalidArgument("unknown claim '" + claim + "'; valid: " + names + "all");
  }
  std::vector<AuditResult> out;
  auto want = [&](const char* name) { return claim == "all" || claim == name; };
  const int n = cfg.n_max;
  if (want("set_iso")) out.push_back(audit_set_isomorphism(std::min(n, 8), {1, 2, 3}, cfg.quick ? 200 : 2000, cfg.seed));
  if (want("gae")) out.push_back(audit_gae_failure(gae_instances(std::min(n, 5))));
  if (want("boost")) {
    out.push_back(cfg.quick ? audit_boost_trend({20, 40, 80}, 2, 3, 3, cfg.seed) : audit_boost_trend({50, 100, 200}, 5, 3, 3, cfg.seed));
  }
  if (want("heuristics")) out.push_back(audit_heuristics(cfg.quick ? 2000 : 10000, 3, cfg.seed));
  if (want("subset")) out.push_back(audit_subset_labeling(std::min(n, 6)));
  if (want("poset")) out.push_back(audit_poset(std::min(n, 4)));
  if (want("hypergraph")) out.push_back(audit_hypergraph(std::min(n, 4), 3));
  if (want("hierarchy")) out.push_back(audit_wl_hierarchy(std::min(n, 6), cfg.quick ? 100 : 500, cfg.seed));
  if (want("tricks")) out.push_back(audit_tricks(cfg.quick ? 100 : 500, 7, cfg.seed));
  return out;
}

}  // namespace labelkit
