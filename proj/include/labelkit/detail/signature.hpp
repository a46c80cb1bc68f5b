#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace labelkit::detail {

/// A refinement signature, flattened to integers.
using Signature = std::vector<std::int64_t>;

/// Maps each signature to its rank among the distinct sorted signatures.
/// Ranks depend only on the multiset of signatures, never on element order.
inline std::vector<int> dense_ranks(const std::vector<Signature>& sigs) {
  std::vector<int> idx(sigs.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return sigs[a] < sigs[b]; });
  std::vector<int> rank(sigs.size());
  int next = -1;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k == 0 || sigs[idx[k]] != sigs[idx[k - 1]]) ++next;
    rank[idx[k]] = next;
  }
  return rank;
}

inline int count_classes(const std::vector<int>& colors) {
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
}

/// Appends a sorted multiset of fixed-width chunks to `out`, prefixed by its size.
inline void append_multiset(Signature& out, std::vector<Signature>& chunks) {
  std::sort(chunks.begin(), chunks.end());
  out.push_back(static_cast<std::int64_t>(chunks.size()));
  for (const auto& c : chunks) {
    out.push_back(static_cast<std::int64_t>(c.size()));
    out.insert(out.end(), c.begin(), c.end());
  }
}

}  // namespace labelkit::detail
