#include "labelkit/labeling.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <numeric>
#include <sstream>

#include "labelkit/errors.hpp"
#include "labelkit/generators.hpp"
#include "labelkit/structure.hpp"

namespace labelkit {

namespace {

void check_members(const NodePoset& s, const Graph& g) {
  for (NodeId v : s.members()) {
    if (v < 0 || v >= g.size()) throw InvalidArgument("target node " + std::to_string(v) + " outside graph");
  }
}

std::vector<int> distances_masking(const Graph& g, NodeId source, std::span<const NodeId> masked_nodes) {
  if (masked_nodes.empty()) return bfs_distances(g, source);
  auto masked = std::make_unique<bool[]>(g.size());
  for (NodeId v : masked_nodes) masked[v] = true;
  return bfs_distances(g, source, std::span<const bool>(masked.get(), g.size()));
}

}  // namespace

NodeLabeling zero_one(const NodePoset& s, const Graph& g) {
  check_members(s, g);
  NodeLabeling l(g.size(), 1);
  for (NodeId v : s.members()) l[v][0] = 1;
  return l;
}

NodeLabeling subset_zero_one(std::span<const NodeId> p, const Graph& g) {
  NodeLabeling l(g.size(), 1);
  for (NodeId v : p) {
    if (v < 0 || v >= g.size()) throw InvalidArgument("subset node " + std::to_string(v) + " outside graph");
    l[v][0] = 1;
  }
  return l;
}

std::int64_t drnl_label(std::int64_t dx, std::int64_t dy) {
  if (dx < 1 || dy < 1) throw InvalidArgument("DRNL radii must be positive");
  const std::int64_t d = dx + dy;
  const std::int64_t half = d / 2;
  return 1 + std::min(dx, dy) + half * (half + d % 2 - 1);
}

NodeLabeling drnl(const NodePoset& s, const Graph& g, bool mask) {
  if (s.size() != 2) throw InvalidArgument("DRNL needs a two-node target, got " + std::to_string(s.size()));
  check_members(s, g);
  const NodeId x = s.members()[0];
  const NodeId y = s.members()[1];
  const std::vector<int> dx = mask ? distances_masking(g, x, std::array{y}) : bfs_distances(g, x);
  const std::vector<int> dy = mask ? distances_masking(g, y, std::array{x}) : bfs_distances(g, y);
  NodeLabeling l(g.size(), 1);
  for (NodeId i = 0; i < g.size(); ++i) {
    if (i == x || i == y) {
      l[i][0] = 1;
    } else if (dx[i] != kUnreachable && dy[i] != kUnreachable) {
      l[i][0] = drnl_label(dx[i], dy[i]);
    }
  }
  return l;
}

NodeLabeling distance_encoding(const NodePoset& s, const Graph& g, std::optional<int> d_max, bool mask) {
  check_members(s, g);
  if (d_max && *d_max < 0) throw InvalidArgument("negative distance cap");
  const auto& m = s.members();
  std::vector<std::vector<int>> dist;
  for (NodeId x : m) {
    std::vector<NodeId> others;
    if (mask) {
      for (NodeId y : m)
        if (y != x) others.push_back(y);
    }
    dist.push_back(distances_masking(g, x, others));
  }
  const std::int64_t unreachable = d_max ? *d_max + 1 : kDistanceInfinity;
  NodeLabeling l(g.size(), static_cast<int>(m.size()));
  for (NodeId i = 0; i < g.size(); ++i) {
    auto& row = l[i];
    for (std::size_t k = 0; k < m.size(); ++k) {
      const int d = dist[k][i];
      row[k] = d == kUnreachable ? unreachable : (d_max ? std::min(d, *d_max) : d);
    }
    std::sort(row.begin(), row.end());
  }
  return l;
}

NodeLabeling de_plus(const NodePoset& s, const Graph& g) { return distance_encoding(s, g, std::nullopt, true); }

std::int64_t hasse_type_id(const NodePoset& s, NodeId u) {
  const auto& m = s.members();
  const int k = static_cast<int>(m.size());
  if (k > 8) throw OracleUnavailable("Hasse embedding supports at most 8 members, got " + std::to_string(k));
  const auto it = std::find(m.begin(), m.end(), u);
  if (it == m.end()) throw InvalidArgument("node " + std::to_string(u) + " is not a member");
  const int target = static_cast<int>(it - m.begin());
  const Graph h = hasse_diagram(s);

  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t key = 0;
    for (int i = 0; i < k; ++i)
      if (order[i] == target) key = static_cast<std::uint64_t>(i);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (i != j) key = key << 1 | (h.has_edge(order[i], order[j]) ? 1u : 0u);
    best = std::min(best, key);
  } while (std::next_permutation(order.begin(), order.end()));

  // k: 4 bits, position: 3 bits, arcs: k(k-1) <= 56 bits.
  const int arc_bits = k * (k - 1);
  const std::uint64_t arcs = arc_bits == 0 ? 0 : best & ((std::uint64_t{1} << arc_bits) - 1);
  const std::uint64_t pos = best >> arc_bits;
  return 1 + static_cast<std::int64_t>(static_cast<std::uint64_t>(k) << 59 | pos << 56 | arcs);
}

NodeLabeling hasse_embedding(const NodePoset& s, const Graph& g) {
  check_members(s, g);
  NodeLabeling l(g.size(), 1);
  for (NodeId v : s.members()) l[v][0] = hasse_type_id(s, v);
  return l;
}

NodeLabeling linear_order_labels(const NodePoset& s, const Graph& g) {
  check_members(s, g);
  if (!s.is_total()) throw ValidationError("linear order labels need a totally ordered target");
  NodeLabeling l(g.size(), 1);
  for (NodeId v : s.members()) {
    std::int64_t rank = 0;
    for (NodeId w : s.members())
      if (s.leq(w, v)) ++rank;
    l[v][0] = rank;
  }
  return l;
}

std::vector<std::vector<NodeId>> nearly_linear_blocks(const NodePoset& s) {
  const auto& m = s.members();
  // Height of each member: longest chain ending there.
  std::vector<int> height(m.size(), 1);
  std::vector<std::size_t> idx(m.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    int below_a = 0, below_b = 0;
    for (NodeId w : m) {
      below_a += s.leq(w, m[a]);
      below_b += s.leq(w, m[b]);
    }
    return below_a != below_b ? below_a < below_b : a < b;
  });
  for (std::size_t a : idx)
    for (std::size_t b = 0; b < m.size(); ++b)
      if (b != a && s.leq(m[b], m[a])) height[a] = std::max(height[a], height[b] + 1);

  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = 0; b < m.size(); ++b) {
      if (a == b) continue;
      if (s.leq(m[a], m[b]) != (height[a] < height[b])) {
        throw ValidationError("order is not nearly linear: nodes " + std::to_string(m[a]) + " and " +
                              std::to_string(m[b]) + " break the block structure");
      }
    }
  }
  const int levels = m.empty() ? 0 : *std::max_element(height.begin(), height.end());
  std::vector<std::vector<NodeId>> blocks(levels);
  for (std::size_t a = 0; a < m.size(); ++a) blocks[height[a] - 1].push_back(m[a]);
  return blocks;
}

NodeLabeling nearly_linear_order_labels(const NodePoset& s, const Graph& g) {
  check_members(s, g);
  const auto blocks = nearly_linear_blocks(s);
  NodeLabeling l(g.size(), 1);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (NodeId v : blocks[b]) l[v][0] = static_cast<std::int64_t>(b + 1);
  return l;
}

// ------------------------------------------------------------------ names

namespace {

constexpr std::array kTricks{Trick::zero_one, Trick::drnl,   Trick::de,            Trick::de_plus,
                             Trick::hasse,    Trick::linear, Trick::nearly_linear, Trick::subset_zero_one};

}  // namespace

std::span<const Trick> all_tricks() { return kTricks; }

std::string_view trick_name(Trick t) {
  switch (t) {
    case Trick::zero_one: return "zero_one";
    case Trick::drnl: return "drnl";
    case Trick::de: return "de";
    case Trick::de_plus: return "de_plus";
    case Trick::hasse: return "hasse";
    case Trick::linear: return "linear";
    case Trick::nearly_linear: return "nearly_linear";
    case Trick::subset_zero_one: return "subset_zero_one";
  }
  return "?";
}

std::string valid_trick_names() {
  std::string out;
  for (Trick t : kTricks) {
    if (!out.empty()) out += " | ";
    out += trick_name(t);
  }
  return out;
}

Trick parse_trick(std::string_view name) {
  for (Trick t : kTricks)
    if (trick_name(t) == name) return t;
  throw InvalidArgument("unknown labeling '" + std::string(name) + "'; valid names: " + valid_trick_names());
}

NodeLabeling apply_trick(Trick t, const NodePoset& s, const Graph& g) {
  switch (t) {
    case Trick::zero_one: return zero_one(s, g);
    case Trick::drnl: return drnl(s, g);
    case Trick::de: return distance_encoding(s, g);
    case Trick::de_plus: return de_plus(s, g);
    case Trick::hasse: return hasse_embedding(s, g);
    case Trick::linear: return linear_order_labels(s, g);
    case Trick::nearly_linear: return nearly_linear_order_labels(s, g);
    case Trick::subset_zero_one: return subset_zero_one(s.members(), g);
  }
  throw InvalidArgument("unknown trick");
}

// ------------------------------------------------------------ subset tricks

NodeId select_one_head(const NodePoset& s, const Graph& g, const SubsetPolicy& policy) {
  check_members(s, g);
  const auto& m = s.members();
  if (m.empty()) throw InvalidArgument("one-head selection on an empty target");
  switch (policy.kind) {
    case SubsetPolicy::Kind::random: {
      Rng rng(policy.seed);
      return m[uniform_below(rng, m.size())];
    }
    case SubsetPolicy::Kind::max_degree: {
      NodeId best = m[0];
      for (NodeId v : m)
        if (g.degree(v) > g.degree(best)) best = v;
      return best;
    }
    case SubsetPolicy::Kind::least_element:
      for (NodeId v : m) {
        if (std::all_of(m.begin(), m.end(), [&](NodeId w) { return s.leq(v, w); })) return v;
      }
      throw ValidationError("target poset has no least element");
  }
  throw InvalidArgument("unknown subset policy");
}

NodeLabeling one_head_label(const NodePoset& s, const Graph& g, const SubsetPolicy& policy) {
  const NodeId v = select_one_head(s, g, policy);
  return subset_zero_one(std::array{v}, g);
}

namespace {

void for_each_subset(const std::vector<NodeId>& m, int k, const std::function<void(std::vector<NodeId>)>& fn) {
  const int n = static_cast<int>(m.size());
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    std::vector<NodeId> p;
    for (int i : idx) p.push_back(m[i]);
    fn(std::move(p));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct Copy {
  std::size_t owner;
  std::vector<NodeId> subset;
  NodeLabeling labels;
};

bool comparable(const Graph& g1, const Graph& g2) {
  return g1.directed() == g2.directed() && g1.node_dim() == g2.node_dim();
}

std::vector<CanonicalCode> sorted_codes(std::vector<CanonicalCode> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

bool subset_pooling_distinguishes(const Graph& g1, const NodePoset& s1, const Graph& g2, const NodePoset& s2,
                                  int k, const PoolingEngine& engine, SubsetReadout readout) {
  check_members(s1, g1);
  check_members(s2, g2);
  if (k < 0 || k > static_cast<int>(s1.size()) || k > static_cast<int>(s2.size())) {
    throw InvalidArgument("subset size " + std::to_string(k) + " exceeds the target size");
  }
  if (readout == SubsetReadout::labeled_node && k != 1) {
    throw InvalidArgument("labeled_node readout needs subsets of size 1");
  }
  if (!comparable(g1, g2)) return true;

  const Graph* graphs[] = {&g1, &g2};
  const NodePoset* targets[] = {&s1, &s2};
  std::vector<Copy> copies;
  for (std::size_t side = 0; side < 2; ++side) {
    for_each_subset(targets[side]->members(), k, [&](std::vector<NodeId> p) {
      NodeLabeling l = subset_zero_one(p, *graphs[side]);
      copies.push_back({side, std::move(p), std::move(l)});
    });
  }

  if (engine.kind == PoolingEngine::Kind::oracle) {
    std::vector<CanonicalCode> bags[2];
    for (const Copy& c : copies) {
      const Graph stacked = c.labels.stacked_onto(*graphs[c.owner]);
      switch (readout) {
        case SubsetReadout::targets:
          bags[c.owner].push_back(canonical_code(*targets[c.owner], stacked, engine.oracle));
          break;
        case SubsetReadout::labeled_node:
          bags[c.owner].push_back(canonical_code(NodePoset::set(c.subset), stacked, engine.oracle));
          break;
        case SubsetReadout::whole_graph:
          bags[c.owner].push_back(canonical_code(NodePoset(), stacked, engine.oracle));
          break;
      }
    }
    return sorted_codes(std::move(bags[0])) != sorted_codes(std::move(bags[1]));
  }

  std::vector<LabeledGraph> parts;
  for (const Copy& c : copies) parts.push_back({graphs[c.owner], &c.labels});
  const auto colors = joint_refine(parts, engine.layers);
  std::vector<std::vector<int>> bags[2];
  for (std::size_t i = 0; i < copies.size(); ++i) {
    const Copy& c = copies[i];
    std::vector<int> key;
    switch (readout) {
      case SubsetReadout::targets:
        for (NodeId v : targets[c.owner]->members()) key.push_back(colors[i][v]);
        break;
      case SubsetReadout::labeled_node:
        key.push_back(colors[i][c.subset[0]]);
        break;
      case SubsetReadout::whole_graph:
        key = colors[i];
        break;
    }
    std::sort(key.begin(), key.end());
    bags[c.owner].push_back(std::move(key));
  }
  std::sort(bags[0].begin(), bags[0].end());
  std::sort(bags[1].begin(), bags[1].end());
  return bags[0] != bags[1];
}

bool set_labeling_distinguishes(const Graph& g1, const NodePoset& s1, const Graph& g2, const NodePoset& s2,
                                const PoolingEngine& engine, Readout readout) {
  const NodeLabeling l1 = zero_one(s1, g1);
  const NodeLabeling l2 = zero_one(s2, g2);
  if (engine.kind == PoolingEngine::Kind::wl) {
    return wl_distinguishes(g1, &l1, s1, g2, &l2, s2, engine.layers, readout);
  }
  if (!comparable(g1, g2)) return true;
  const Graph a = l1.stacked_onto(g1);
  const Graph b = l2.stacked_onto(g2);
  if (readout == Readout::whole_graph) {
    return canonical_code(NodePoset(), a, engine.oracle) != canonical_code(NodePoset(), b, engine.oracle);
  }
  // Injective aggregation of node-level representations of the members.
  std::vector<CanonicalCode> c1, c2;
  for (NodeId v : s1.members()) c1.push_back(canonical_code(NodePoset::set({v}), a, engine.oracle));
  for (NodeId v : s2.members()) c2.push_back(canonical_code(NodePoset::set({v}), b, engine.oracle));
  return sorted_codes(std::move(c1)) != sorted_codes(std::move(c2));
}

const NodeLabeling& SubsetLabelCache::get(int graph_id, const Graph& g, std::vector<NodeId> subset) {
  std::sort(subset.begin(), subset.end());
  auto key = std::make_pair(graph_id, subset);
  auto it = cache_.find(key);
  if (it != cache_.end()) {
    ++hits_;
    return it->second;
  }
  return cache_.emplace(std::move(key), subset_zero_one(subset, g)).first->second;
}

// ---------------------------------------------------------------- validator

TrickUnderTest trick_under_test(Trick t) {
  using T = TrickUnderTest::Targets;
  TrickUnderTest out;
  out.name = std::string(trick_name(t));
  switch (t) {
    case Trick::zero_one:
    case Trick::subset_zero_one:
      out.targets = T::any_set;
      break;
    case Trick::drnl:
      out.targets = T::pair;
      break;
    case Trick::de:
    case Trick::de_plus:
      out.targets = T::any_set;
      break;
    case Trick::hasse:
      out.targets = T::poset;
      out.directed_graphs = true;
      break;
    case Trick::linear:
      out.targets = T::total_order;
      out.directed_graphs = true;
      break;
    case Trick::nearly_linear:
      out.targets = T::nearly_linear;
      out.directed_graphs = true;
      break;
  }
  out.label = [t](const NodePoset& s, const Graph& g) { return apply_trick(t, s, g); };
  return out;
}

namespace {

NodePoset draw_target(TrickUnderTest::Targets kind, int n, Rng& rng) {
  using T = TrickUnderTest::Targets;
  const int cap = std::min(n, 3);
  const int size = kind == T::pair ? 2 : 1 + static_cast<int>(uniform_below(rng, cap));
  std::vector<NodeId> m = random_subset(n, size, rng);
  switch (kind) {
    case T::any_set:
    case T::pair:
      return NodePoset::set(m);
    case T::poset:
      return random_poset(m, 0.5, rng);
    case T::total_order:
      shuffle(m, rng);
      return NodePoset::chain(m);
    case T::nearly_linear: {
      shuffle(m, rng);
      std::vector<std::vector<NodeId>> blocks;
      for (NodeId v : m) {
        if (blocks.empty() || uniform_unit(rng) < 0.5) blocks.emplace_back();
        blocks.back().push_back(v);
      }
      std::vector<NodePair> pairs;
      for (std::size_t b = 0; b + 1 < blocks.size(); ++b)
        for (NodeId u : blocks[b])
          for (NodeId v : blocks[b + 1]) pairs.push_back({u, v});
      return NodePoset::from_order(m, pairs);
    }
  }
  return NodePoset::set(m);
}

std::string describe(const NodePoset& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < s.members().size(); ++i) os << (i ? "," : "") << s.members()[i];
  os << "}";
  if (!s.is_set()) {
    os << " with";
    for (auto [a, b] : s.relation())
      if (a != b) os << " " << a << "<" << b;
  }
  return os.str();
}

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.size() << (g.directed() ? " directed" : "") << " edges=[";
  bool first = true;
  for (const Edge& e : g.edges()) {
    os << (first ? "" : " ") << e.from << "-" << e.to;
    first = false;
  }
  os << "]";
  return os.str();
}

}  // namespace

ValidationReport validate_labeling_trick(const TrickUnderTest& trick, int trials, int n_max, std::uint64_t seed) {
  if (n_max < 2 || n_max > 8) throw InvalidArgument("validator supports 2 <= n_max <= 8");
  ValidationReport report;
  report.trick = trick.name;
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    ++report.trials;
    const int n = 2 + static_cast<int>(uniform_below(rng, n_max - 1));
    const bool directed = trick.directed_graphs && uniform_unit(rng) < 0.5;
    const double p = 0.2 + 0.4 * uniform_unit(rng);
    const Graph g = erdos_renyi(n, p, directed, rng);
    const NodePoset s = draw_target(trick.targets, n, rng);
    const Permutation pi = Permutation::random(n, rng);

    // Permutation equivariance.
    const NodeLabeling l = trick.label(s, g);
    const NodeLabeling moved = trick.label(s.permuted(pi), apply_permutation(g, pi));
    if (moved != l.permuted(pi)) {
      ++report.equivariance_violations;
      report.counterexamples.push_back("equivariance: S=" + describe(s) + " g=" + describe(g) + " pi=" +
                                       describe(NodePoset::set(pi.mapping())));
    }

    // Target distinguishing: g' = pi(g) and S' either pi(S) or a fresh target.
    const Graph g2 = apply_permutation(g, pi);
    const NodePoset s2 = uniform_unit(rng) < 0.5 ? s.permuted(pi) : draw_target(trick.targets, n, rng);
    const NodeLabeling l2 = trick.label(s2, g2);
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), 0);
    do {
      const Permutation sigma{std::vector<NodeId>(order)};
      bool match = true;
      for (NodeId v = 0; v < n && match; ++v) match = l2[v] == l[sigma(v)];
      if (!match) continue;
      ++report.distinguishing_checks;
      if (s2.permuted(sigma) != s) {
        ++report.distinguishing_violations;
        report.counterexamples.push_back("distinguishing: S=" + describe(s) + " S'=" + describe(s2) +
                                         " g=" + describe(g));
        break;
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return report;
}

}  // namespace labelkit
