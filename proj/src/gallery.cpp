#include <algorithm>
#include <map>
#include <optional>

#include "audit_internal.hpp"
#include "labelkit/errors.hpp"
#include "labelkit/generators.hpp"
#include "labelkit/heuristics.hpp"
#include "labelkit/wl.hpp"

namespace labelkit {

namespace {

constexpr const char* kConstructed = "searched";
constexpr const char* kStandard = "standard";

std::vector<CanonicalCode> node_codes(const Graph& g) {
  std::vector<CanonicalCode> out;
  for (NodeId v = 0; v < g.size(); ++v) out.push_back(canonical_code(NodePoset::set({v}), g));
  return out;
}

bool is_triangle(const Graph& g, NodeId a, NodeId b, NodeId c) {
  return g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c);
}

/// Fills the expectation fields from the engines.
GalleryInstance with_verdicts(GalleryInstance x) {
  const auto v = evaluate_gallery_instance(x);
  x.vanilla_wl = v[0];
  x.set_zero_one_wl = v[1];
  x.subset_one_wl = v[2];
  x.oracle = v[3];
  return x;
}

/// Node pair in one orbit giving links with CN 1 and CN 0 to a common node.
std::optional<GalleryInstance> search_orbit_links() {
  for (int n = 4; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n, false, true)) {
      const auto codes = node_codes(g);
      for (NodeId a = 0; a < n; ++a) {
        for (NodeId b = 0; b < n; ++b) {
          for (NodeId c = b + 1; c < n; ++c) {
            if (a == b || a == c || codes[b] != codes[c]) continue;
            if (common_neighbors(g, a, b) != 1 || common_neighbors(g, a, c) != 0) continue;
            GalleryInstance x = with_verdicts(
                {"orbit links with CN 1 vs 0", kConstructed, g, NodePoset::set({a, b}), g, NodePoset::set({a, c})});
            if (!x.vanilla_wl && x.set_zero_one_wl && x.oracle) return x;
          }
        }
      }
    }
  }
  return std::nullopt;
}

/// Triangle 3-set against a non-triangle 3-set whose differing members share an orbit.
std::optional<GalleryInstance> search_triangle_sets() {
  for (int n = 4; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n, false, true)) {
      const auto codes = node_codes(g);
      for (NodeId a = 0; a < n; ++a) {
        for (NodeId b = a + 1; b < n; ++b) {
          for (NodeId c = 0; c < n; ++c) {
            for (NodeId d = 0; d < n; ++d) {
              if (c == d || c == a || c == b || d == a || d == b || codes[c] != codes[d]) continue;
              if (!is_triangle(g, a, b, c) || is_triangle(g, a, b, d)) continue;
              GalleryInstance x = with_verdicts({"triangle vs open 3-set", kConstructed, g, NodePoset::set({a, b, c}),
                                                 g, NodePoset::set({a, b, d})});
              if (!x.vanilla_wl && x.set_zero_one_wl && x.oracle) return x;
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

/// 3-sets where set zero-one labeling separates and subset(1) pooling ties.
std::optional<GalleryInstance> search_set_beats_subset() {
  constexpr int kDepth = 16;  // past joint stabilization for two graphs of <= 8 nodes
  ColorTable subset_table, set_table;
  struct Entry {
    Graph g;
    NodePoset s;
    std::vector<int> set_key;
  };
  std::map<std::vector<int>, std::vector<Entry>> groups;  // keyed by n, then the subset key
  auto consider = [&](const Graph& g, const NodePoset& s) -> std::optional<GalleryInstance> {
    std::vector<int> sub_key;
    for (NodeId u : s.members()) {
      const NodeLabeling l = subset_zero_one(std::array{u}, g);
      sub_key.push_back(wl_refine_shared(subset_table, g, &l, kDepth).final_colors()[u]);
    }
    std::sort(sub_key.begin(), sub_key.end());
    sub_key.insert(sub_key.begin(), g.size());
    const NodeLabeling zo = zero_one(s, g);
    const auto colors = wl_refine_shared(set_table, g, &zo, kDepth).final_colors();
    std::vector<int> set_key;
    for (NodeId u : s.members()) set_key.push_back(colors[u]);
    std::sort(set_key.begin(), set_key.end());
    auto& bucket = groups[sub_key];
    for (const Entry& e : bucket) {
      if (e.set_key == set_key) continue;
      GalleryInstance x = with_verdicts({"set labeling beats subset pooling", kConstructed, e.g, e.s, g, s});
      if (x.set_zero_one_wl && !x.subset_one_wl) return x;
    }
    if (bucket.size() < 8) bucket.push_back({g, s, std::move(set_key)});
    return std::nullopt;
  };
  for (int n = 3; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n, false, false)) {
      for (NodeId a = 0; a < n; ++a)
        for (NodeId b = a + 1; b < n; ++b)
          for (NodeId c = b + 1; c < n; ++c)
            if (auto x = consider(g, NodePoset::set({a, b, c}))) return x;
    }
  }
  Rng rng(0x666967367365ULL);
  for (int t = 0; t < 20000; ++t) {
    const int n = 7 + static_cast<int>(uniform_below(rng, 2));
    const Graph g = erdos_renyi(n, 0.2 + 0.4 * uniform_unit(rng), false, rng);
    if (auto x = consider(g, NodePoset::set(random_subset(n, 3, rng)))) return x;
  }
  return std::nullopt;
}

std::vector<GalleryInstance> build_gallery() {
  std::vector<GalleryInstance> out;
  auto require = [](std::optional<GalleryInstance> x, const char* what) {
    if (!x) throw ValidationError(std::string("gallery search found no ") + what + " instance");
    return *x;
  };
  out.push_back(require(search_orbit_links(), "orbit-link"));
  out.push_back(require(search_triangle_sets(), "triangle"));

  const Graph c6 = cycle_graph(6);
  const Graph two_triangles = disjoint_union(complete_graph(3), complete_graph(3));
  const NodePoset all = NodePoset::set({0, 1, 2, 3, 4, 5});
  out.push_back({"C6 vs two triangles, whole node set", kStandard, c6, all, two_triangles, all, false, false, true, true});

  out.push_back(require(search_set_beats_subset(), "set-beats-subset"));

  out.push_back({"C6 link vs non-link", kStandard, c6, NodePoset::set({0, 1}), c6, NodePoset::set({0, 2}), false, true,
                 false, true});

  const Graph path = Graph::from_pairs(3, true, std::vector<NodePair>{{0, 1}, {1, 2}});
  out.push_back({"directed path link orientation", kStandard, path, NodePoset::chain({0, 1}), path,
                 NodePoset::chain({1, 0}), false, false, false, true});

  for (const auto& x : out) {
    const auto live = evaluate_gallery_instance(x);
    const std::array<bool, 4> stated{x.vanilla_wl, x.set_zero_one_wl, x.subset_one_wl, x.oracle};
    if (live != stated) throw ValidationError("gallery instance '" + x.name + "' does not verify");
  }
  return out;
}

json expected_json(const GalleryInstance& x) {
  return json{{"vanilla_wl", x.vanilla_wl},
              {"set_zero_one_wl", x.set_zero_one_wl},
              {"subset_one_wl", x.subset_one_wl},
              {"oracle", x.oracle}};
}

}  // namespace

std::array<bool, 4> evaluate_gallery_instance(const GalleryInstance& x) {
  const NodePoset set1 = NodePoset::set(x.s1.members());
  const NodePoset set2 = NodePoset::set(x.s2.members());
  const PoolingEngine wl = PoolingEngine::wl();
  return {wl_distinguishes(x.g1, nullptr, x.s1, x.g2, nullptr, x.s2),
          set_labeling_distinguishes(x.g1, x.s1, x.g2, x.s2, wl),
          subset_pooling_distinguishes(x.g1, set1, x.g2, set2, 1, wl, SubsetReadout::labeled_node),
          !are_substructures_isomorphic(x.s1, x.g1, x.s2, x.g2)};
}

std::vector<GalleryInstance> gallery() {
  static const std::vector<GalleryInstance> cached = build_gallery();
  return cached;
}

json gallery_to_json(const std::vector<GalleryInstance>& items) {
  json out = json::array();
  for (const auto& x : items) {
    out.push_back(json{{"name", x.name},
                       {"provenance", x.provenance},
                       {"graph1", graph_to_json(x.g1)},
                       {"target1", poset_to_json(x.s1)},
                       {"graph2", graph_to_json(x.g2)},
                       {"target2", poset_to_json(x.s2)},
                       {"expected", expected_json(x)}});
  }
  return out;
}

std::vector<GalleryInstance> gallery_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("gallery must be a JSON array", 0);
  std::vector<GalleryInstance> out;
  for (const json& e : j) {
    GalleryInstance x;
    x.name = e.at("name").get<std::string>();
    x.provenance = e.value("provenance", std::string(kStandard));
    x.g1 = graph_from_json(e.at("graph1"));
    x.s1 = poset_from_json(e.at("target1"));
    x.g2 = graph_from_json(e.at("graph2"));
    x.s2 = poset_from_json(e.at("target2"));
    const json& ex = e.at("expected");
    x.vanilla_wl = ex.at("vanilla_wl").get<bool>();
    x.set_zero_one_wl = ex.at("set_zero_one_wl").get<bool>();
    x.subset_one_wl = ex.at("subset_one_wl").get<bool>();
    x.oracle = ex.at("oracle").get<bool>();
    const auto live = evaluate_gallery_instance(x);
    if (live != std::array<bool, 4>{x.vanilla_wl, x.set_zero_one_wl, x.subset_one_wl, x.oracle}) {
      throw ValidationError("gallery instance '" + x.name + "' does not match its stored verdicts");
    }
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace labelkit
