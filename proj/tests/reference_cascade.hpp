#pragma once

#include <algorithm>
#include <vector>

#include "orbitkit/hermitian.hpp"

namespace orbitkit::testing {

// Exhaustive reference: among all strongly orthogonal subsets, the one whose
// members listed in decreasing (height, lex) order form the largest sequence.
inline std::vector<Weight> brute_force_cascade(std::vector<Weight> src, const RootSystem& rs) {
  std::sort(src.begin(), src.end(), [&](const Weight& a, const Weight& b) {
    auto ha = rs.height(a), hb = rs.height(b);
    return ha != hb ? ha > hb : a > b;
  });
  const std::size_t n = src.size();
  auto key_less = [&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    // Indices are in decreasing root order, so a smaller index is a higher root.
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
      if (a[i] != b[i]) return a[i] > b[i];
    return a.size() < b.size();
  };
  std::vector<std::size_t> best;
  for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) idx.push_back(i);
    bool ok = true;
    for (std::size_t a = 0; a < idx.size() && ok; ++a)
      for (std::size_t b = a + 1; b < idx.size() && ok; ++b) ok = strongly_orthogonal(src[idx[a]], src[idx[b]], rs);
    if (ok && key_less(best, idx)) best = idx;
  }
  std::vector<Weight> out;
  for (auto i : best) out.push_back(src[i]);
  return out;
}

// Same target reached by walking every ordering: depth-first over all
// sequences of pairwise strongly orthogonal roots, keeping the largest
// sequence in the (height, lex) order.
inline std::vector<Weight> brute_force_cascade_orderings(const std::vector<Weight>& src, const RootSystem& rs) {
  auto root_less = [&](const Weight& a, const Weight& b) {
    auto ha = rs.height(a), hb = rs.height(b);
    return ha != hb ? ha < hb : a < b;
  };
  auto seq_less = [&](const std::vector<Weight>& a, const std::vector<Weight>& b) {
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
      if (root_less(a[i], b[i])) return true;
      if (root_less(b[i], a[i])) return false;
    }
    return a.size() < b.size();
  };
  std::vector<Weight> best, cur;
  std::vector<bool> used(src.size(), false);
  auto walk = [&](auto&& self) -> void {
    if (seq_less(best, cur)) best = cur;
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (used[i]) continue;
      bool ok = true;
      for (const auto& w : cur) ok = ok && strongly_orthogonal(w, src[i], rs);
      if (!ok) continue;
      used[i] = true;
      cur.push_back(src[i]);
      self(self);
      cur.pop_back();
      used[i] = false;
    }
  };
  walk(walk);
  return best;
}

}  // namespace orbitkit::testing
