#pragma once

#include <compare>
#include <string>

#include "labelkit/graph.hpp"

namespace labelkit {

/// Exact isomorphism oracles for small graphs.
///
/// Everything here is exhaustive search over permutations and refuses inputs
/// above `max_nodes` with OracleUnavailable instead of guessing.
struct OracleOptions {
  int max_nodes = 8;
  /// Hypergraph search enumerates Π_n × Π_m; both sides are bounded.
  int max_hyperedges = 8;
};

/// Byte string identifying the isomorphism class of a (poset, graph) pair.
/// Equal codes mean isomorphic inputs; the encoding is big-endian and
/// independent of platform.
struct CanonicalCode {
  std::string bytes;

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  std::string hex() const;
};

/// Lexicographically smallest serialization of (marking, graph) over all node
/// orders that respect an isomorphism-invariant ordered partition. The marking
/// carries both membership and the poset relation, so set and poset targets
/// share one oracle. An empty poset gives the code of the bare graph.
CanonicalCode canonical_code(const NodePoset& s, const Graph& g, const OracleOptions& opts = {});

/// True iff some permutation maps (s2, g2) onto (s1, g1), relation pairs
/// included. Independent backtracking search; does not use canonical_code.
bool are_substructures_isomorphic(const NodePoset& s1, const Graph& g1, const NodePoset& s2,
                                  const Graph& g2, const OracleOptions& opts = {});

/// Canonical form of (node poset, hypergraph) by brute force over Π_n × Π_m.
CanonicalCode hypergraph_canonical_code(const NodePoset& s, const Hypergraph& h,
                                        const OracleOptions& opts = {});

/// Poset-hypergraph isomorphism: some (π1, π2) maps (s2, h2) onto (s1, h1).
bool are_hypergraph_substructures_isomorphic(const NodePoset& s1, const Hypergraph& h1,
                                             const NodePoset& s2, const Hypergraph& h2,
                                             const OracleOptions& opts = {});

}  // namespace labelkit
