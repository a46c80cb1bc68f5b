#include "labelkit/heuristics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

#include "labelkit/errors.hpp"
#include "labelkit/labeling.hpp"
#include "labelkit/wl.hpp"

namespace labelkit {

namespace {

std::vector<NodeId> common(const Graph& g, NodeId i, NodeId j) {
  if (i < 0 || j < 0 || i >= g.size() || j >= g.size()) throw InvalidArgument("pair node outside graph");
  if (i == j) throw InvalidArgument("heuristics need two distinct nodes");
  const auto a = g.out_neighbors(i);
  const auto b = g.out_neighbors(j);
  std::vector<NodeId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// Degrees of common neighbors, ascending, so equal multisets sum identically.
std::vector<int> common_degrees(const Graph& g, NodeId i, NodeId j) {
  std::vector<int> d;
  for (NodeId w : common(g, i, j)) d.push_back(g.degree(w));
  std::sort(d.begin(), d.end());
  return d;
}

double aa_sum(const std::vector<int>& degrees) {
  double s = 0.0;
  for (int d : degrees) {
    if (d < 2) throw DomainError("Adamic-Adar undefined for a common neighbor of degree " + std::to_string(d));
    s += 1.0 / std::log(static_cast<double>(d));
  }
  return s;
}

double ra_sum(const std::vector<int>& degrees) {
  double s = 0.0;
  for (int d : degrees) s += 1.0 / d;
  return s;
}

}  // namespace

int common_neighbors(const Graph& g, NodeId i, NodeId j) { return static_cast<int>(common(g, i, j).size()); }

double adamic_adar(const Graph& g, NodeId i, NodeId j) { return aa_sum(common_degrees(g, i, j)); }

double resource_allocation(const Graph& g, NodeId i, NodeId j) { return ra_sum(common_degrees(g, i, j)); }

HeuristicScores score_pair(const Graph& g, NodeId i, NodeId j) {
  const auto d = common_degrees(g, i, j);
  return {static_cast<int>(d.size()), aa_sum(d), ra_sum(d)};
}

HeuristicCheckReport heuristic_refinement_check(std::span<const Graph> graphs, std::span<const PairRef> targets,
                                                int depth, std::size_t pair_pairs, std::uint64_t seed) {
  if (depth < 2) throw InvalidArgument("the heuristic check needs depth >= 2");
  HeuristicCheckReport report;
  report.depth = depth;
  report.targets = targets.size();

  ColorTable labeled_table;
  ColorTable vanilla_table;
  std::vector<std::vector<int>> vanilla(graphs.size());
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    vanilla[gi] = wl_refine_shared(vanilla_table, graphs[gi], nullptr, depth).final_colors();
  }

  std::vector<std::array<int, 2>> labeled_key(targets.size());
  std::vector<std::array<int, 2>> vanilla_key(targets.size());
  std::vector<HeuristicScores> scores(targets.size());
  for (std::size_t t = 0; t < targets.size(); ++t) {
    const PairRef& r = targets[t];
    if (r.graph >= graphs.size()) throw InvalidArgument("target refers to a missing graph");
    const Graph& g = graphs[r.graph];
    scores[t] = score_pair(g, r.i, r.j);
    const NodeLabeling zo = subset_zero_one(std::array{r.i, r.j}, g);
    const auto colors = wl_refine_shared(labeled_table, g, &zo, depth).final_colors();
    labeled_key[t] = {std::min(colors[r.i], colors[r.j]), std::max(colors[r.i], colors[r.j])};
    const auto& v = vanilla[r.graph];
    vanilla_key[t] = {std::min(v[r.i], v[r.j]), std::max(v[r.i], v[r.j])};
  }

  auto check = [&](std::size_t a, std::size_t b) {
    if (scores[a] == scores[b]) return;
    ++report.violations;
    if (report.violation_details.size() < 20) {
      const auto& x = targets[a];
      const auto& y = targets[b];
      report.violation_details.push_back("graph " + std::to_string(x.graph) + " (" + std::to_string(x.i) + "," +
                                         std::to_string(x.j) + ") vs graph " + std::to_string(y.graph) + " (" +
                                         std::to_string(y.i) + "," + std::to_string(y.j) + ")");
    }
  };

  if (!targets.empty()) {
    Rng rng(seed);
    for (std::size_t s = 0; s < pair_pairs; ++s) {
      const std::size_t a = uniform_below(rng, targets.size());
      const std::size_t b = uniform_below(rng, targets.size());
      ++report.pair_pairs;
      if (labeled_key[a] != labeled_key[b]) continue;
      ++report.labeled_equal;
      check(a, b);
    }
  }

  std::map<std::array<int, 2>, std::vector<std::size_t>> classes;
  for (std::size_t t = 0; t < targets.size(); ++t) classes[labeled_key[t]].push_back(t);
  for (const auto& [key, members] : classes) {
    for (std::size_t x = 1; x < members.size(); ++x) {
      ++report.class_pairs;
      check(members[0], members[x]);
    }
  }

  std::map<std::array<int, 2>, std::array<long, 2>> by_vanilla;  // first target with CN 0 / CN 1
  for (std::size_t t = 0; t < targets.size() && report.unlabeled_witnesses.size() < 10; ++t) {
    if (scores[t].cn > 1) continue;
    auto& slot = by_vanilla.try_emplace(vanilla_key[t], std::array<long, 2>{-1, -1}).first->second;
    const int cn = scores[t].cn;
    if (slot[cn] < 0) {
      slot[cn] = static_cast<long>(t);
      if (slot[1 - cn] >= 0) {
        report.unlabeled_witnesses.push_back({targets[slot[1]], targets[slot[0]]});
      }
    }
  }
  return report;
}

}  // namespace labelkit
