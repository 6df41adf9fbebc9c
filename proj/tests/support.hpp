#pragma once

// Independent oracles shared by the test suites. These deliberately avoid
// the library's own code paths: lengths come from inversion counting on the
// full permutation, index sets from raw subset recursion, and chain counts
// from brute-force enumeration.

#include <vector>

#include "richgrass/poset.hpp"

namespace testsupport {

using richgrass::GrassContext;
using richgrass::PluckerIndex;

// All d-subsets of {1..n} by plain recursion.
inline void subsets_rec(int n, int d, int from, std::vector<int>& acc,
                        std::vector<std::vector<int>>& out) {
  if (static_cast<int>(acc.size()) == d) {
    out.push_back(acc);
    return;
  }
  for (int v = from; v <= n; ++v) {
    acc.push_back(v);
    subsets_rec(n, d, v + 1, acc, out);
    acc.pop_back();
  }
}

inline std::vector<std::vector<int>> all_subsets(int n, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> acc;
  subsets_rec(n, d, 1, acc, out);
  return out;
}

// Length oracle: inversions of the permutation (i_1..i_d, complement
// ascending).
inline int inversion_length(const GrassContext& ctx, const PluckerIndex& a) {
  std::vector<int> perm(a.entries());
  for (int v = 1; v <= ctx.n(); ++v)
    if (!a.contains(v)) perm.push_back(v);
  int inversions = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions;
}

// Saturated-chain count from v to w by raw recursion over all indices.
inline long brute_chain_count(const GrassContext& ctx, const PluckerIndex& from,
                              const PluckerIndex& to) {
  if (from == to) return 1;
  long total = 0;
  for (const auto& next : richgrass::enumerate_indices(ctx))
    if (richgrass::covers(from, next) && richgrass::bruhat_leq(next, to))
      total += brute_chain_count(ctx, next, to);
  return total;
}

}  // namespace testsupport
