#pragma once

#include <map>
#include <string>
#include <vector>

#include "labelkit/audit.hpp"
#include "labelkit/io.hpp"
#include "labelkit/labeling.hpp"

namespace labelkit::audit_detail {

inline constexpr std::size_t kExampleLimit = 20;

/// Outcome of comparing two partitions of the same instance list.
struct PartitionCheck {
  std::size_t pairs = 0;
  std::size_t disagreements = 0;
  std::vector<std::pair<std::size_t, std::size_t>> examples;
};

/// Checks truth[i] == truth[j] <=> claim[i] == claim[j] over all pairs
/// without visiting them one by one.
template <typename A, typename B>
PartitionCheck compare_partitions(const std::vector<A>& truth, const std::vector<B>& claim) {
  PartitionCheck out;
  const std::size_t n = truth.size();
  out.pairs = n < 2 ? 0 : n * (n - 1) / 2;
  auto choose2 = [](std::size_t k) { return k < 2 ? std::size_t{0} : k * (k - 1) / 2; };

  auto scan = [&](const auto& outer, const auto& inner) {
    using OuterKey = typename std::decay_t<decltype(outer)>::value_type;
    using InnerKey = typename std::decay_t<decltype(inner)>::value_type;
    std::map<OuterKey, std::map<InnerKey, std::vector<std::size_t>>> groups;
    for (std::size_t i = 0; i < n; ++i) groups[outer[i]][inner[i]].push_back(i);
    for (const auto& [key, sub] : groups) {
      if (sub.size() < 2) continue;
      std::size_t total = 0, same = 0;
      for (const auto& [k2, idx] : sub) {
        total += idx.size();
        same += choose2(idx.size());
      }
      out.disagreements += choose2(total) - same;
      if (out.examples.size() < kExampleLimit) {
        out.examples.push_back({sub.begin()->second.front(), std::next(sub.begin())->second.front()});
      }
    }
  };
  scan(truth, claim);
  scan(claim, truth);
  return out;
}

inline NodeLabeling zo(const NodePoset& s, const Graph& g) { return zero_one(s, g); }

/// Sorted canonical codes of each member inside `g`.
inline std::vector<CanonicalCode> member_codes(const NodePoset& s, const Graph& g) {
  std::vector<CanonicalCode> out;
  for (NodeId v : s.members()) out.push_back(canonical_code(NodePoset::set({v}), g));
  std::sort(out.begin(), out.end());
  return out;
}

inline json pair_instance(const std::string& kind, const Graph& g1, const NodePoset& s1, const Graph& g2,
                          const NodePoset& s2) {
  return json{{"kind", kind},
              {"graph1", graph_to_json(g1)},
              {"target1", poset_to_json(s1)},
              {"graph2", graph_to_json(g2)},
              {"target2", poset_to_json(s2)}};
}

inline json audit_rerun(const std::string& claim, const json& params, const std::string& reason) {
  return json{{"kind", "audit"}, {"claim", claim}, {"params", params}, {"reason", reason}};
}

// Instance-level checks shared by the audits and by replay. Each returns
// true when the instance violates the claim.
bool set_iso_fails(const Graph& g1, const NodePoset& s1, const Graph& g2, const NodePoset& s2);
bool gae_soundness_fails(const Graph& g1, const NodePoset& s1, const Graph& g2, const NodePoset& s2);
bool subset_pooling_fails(const Graph& g1, const NodePoset& s1, const Graph& g2, const NodePoset& s2);
bool poset_labeling_fails(const Graph& g1, const NodePoset& s1, const Graph& g2, const NodePoset& s2);
bool poset_soundness_fails(const Graph& g, const NodePoset& s1, const NodePoset& s2);
bool hypergraph_iso_fails(const Hypergraph& h1, const NodePoset& s1, const Hypergraph& h2, const NodePoset& s2);
bool hypergraph_codes_fails(const Hypergraph& h1, const NodePoset& s1, const Hypergraph& h2, const NodePoset& s2);
bool wl2_fails(const Graph& g1, const Graph& g2);
bool kwl_pooling_fails(const Graph& g1, const Graph& g2, int k, int l);
bool klwl_order_fails(const Graph& g1, const std::vector<NodeId>& t1, const Graph& g2,
                       const std::vector<NodeId>& t2);

/// Pooled subset(|S|-1) codes, serialized.
std::string pooled_code(const Graph& g, const NodePoset& s);

}  // namespace labelkit::audit_detail
