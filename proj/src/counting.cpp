#include "richgrass/counting.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace richgrass {

namespace {

void enumerate_chains(const std::vector<PluckerIndex>& pool, int remaining,
                      std::optional<size_t> max_at_most, MultiChain& prefix,
                      std::vector<MultiChain>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (size_t i = 0; i < pool.size(); ++i) {
    if (max_at_most && !bruhat_leq(pool[i], pool[*max_at_most])) continue;
    prefix.push_back(pool[i]);
    enumerate_chains(pool, remaining - 1, i, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<MultiChain> enumerate_standard(const GrassContext& ctx,
                                           const RichardsonId& x, int m) {
  if (m < 0) throw std::invalid_argument("negative degree");
  const std::vector<PluckerIndex> pool = interval(ctx, x);
  std::vector<MultiChain> out;
  MultiChain prefix;
  enumerate_chains(pool, m, std::nullopt, prefix, out);
  return out;
}

Int count_standard(const GrassContext& ctx, const RichardsonId& x, int m) {
  if (m < 0) throw std::invalid_argument("negative degree");
  if (m == 0) return 1;
  const std::vector<PluckerIndex> pool = interval(ctx, x);
  const size_t size = pool.size();

  std::vector<std::vector<bool>> leq(size, std::vector<bool>(size));
  for (size_t i = 0; i < size; ++i)
    for (size_t j = 0; j < size; ++j) leq[i][j] = bruhat_leq(pool[i], pool[j]);

  // chains[i] = number of weakly decreasing chains of the current level
  // whose largest factor is pool[i].
  std::vector<Int> chains(size, 1);
  for (int level = 2; level <= m; ++level) {
    std::vector<Int> next(size, 0);
    for (size_t i = 0; i < size; ++i)
      for (size_t j = 0; j < size; ++j)
        if (leq[j][i]) next[i] += chains[j];
    chains = std::move(next);
  }
  Int total = 0;
  for (const Int& c : chains) total += c;
  return total;
}

namespace {

bool interval_contained(const RichardsonId& inner, const RichardsonId& outer) {
  return bruhat_leq(outer.v(), inner.v()) && bruhat_leq(inner.w(), outer.w());
}

// Drops duplicate and containment-redundant members.
std::vector<RichardsonId> prune_union(const std::vector<RichardsonId>& parts) {
  std::vector<RichardsonId> kept;
  for (const auto& candidate : parts) {
    bool redundant = false;
    for (const auto& other : parts)
      if (!(other == candidate) && interval_contained(candidate, other)) {
        redundant = true;
        break;
      }
    if (!redundant && std::find(kept.begin(), kept.end(), candidate) == kept.end())
      kept.push_back(candidate);
  }
  return kept;
}

}  // namespace

Int count_union(const GrassContext& ctx, const std::vector<RichardsonId>& parts,
                int m) {
  if (parts.empty()) throw std::invalid_argument("union of no richardson varieties");
  if (m < 0) throw std::invalid_argument("negative degree");
  if (m == 0) return 1;
  const std::vector<RichardsonId> members = prune_union(parts);
  if (members.size() == 1) return count_standard(ctx, members.front(), m);

  std::set<MultiChain> chains;
  for (const auto& member : members)
    for (auto& chain : enumerate_standard(ctx, member, m)) chains.insert(std::move(chain));
  return Int(static_cast<unsigned long>(chains.size()));
}

Rat HilbertPoly::operator()(long m) const {
  Rat value(0);
  Rat power(1);
  for (const Rat& c : coefficients) {
    value += c * power;
    power *= m;
  }
  return value;
}

HilbertPoly hilbert_polynomial(const GrassContext& ctx, const RichardsonId& x) {
  const int dim = dim_richardson(x);
  std::vector<long> points;
  std::vector<Int> values;
  for (long m = 0; m <= dim; ++m) {
    points.push_back(m);
    values.push_back(count_standard(ctx, x, static_cast<int>(m)));
  }
  HilbertPoly poly{interpolate_at(points, values)};
  for (long m = dim + 1; m <= dim + 3; ++m)
    if (poly(m) != Rat(count_standard(ctx, x, static_cast<int>(m))))
      throw std::logic_error("hilbert polynomial failed its look-ahead check for [" +
                             x.v().str() + ", " + x.w().str() + "]");
  if (poly.coefficients.empty() || poly.coefficients.back() == 0)
    throw std::logic_error("hilbert polynomial degree dropped below the dimension");
  return poly;
}

Int degree_of_variety(const GrassContext& ctx, const RichardsonId& x) {
  const HilbertPoly poly = hilbert_polynomial(ctx, x);
  const Rat scaled = poly.coefficients.back() * Rat(factorial(poly.degree()));
  if (scaled.get_den() != 1 || scaled <= 0)
    throw std::logic_error("variety degree is not a positive integer");
  return scaled.get_num();
}

Int maximal_chain_count(const GrassContext& ctx, const RichardsonId& x) {
  const std::vector<PluckerIndex> pool = interval(ctx, x);
  std::map<PluckerIndex, Int> up_counts;  // saturated chains from key up to w
  // pool is lexicographic; process in decreasing length order instead.
  std::vector<PluckerIndex> by_length = pool;
  std::sort(by_length.begin(), by_length.end(),
            [](const PluckerIndex& a, const PluckerIndex& b) {
              return length(a) > length(b) || (length(a) == length(b) && a < b);
            });
  for (const auto& node : by_length) {
    if (node == x.w()) {
      up_counts[node] = 1;
      continue;
    }
    Int total = 0;
    for (const auto& above : pool)
      if (covers(node, above)) total += up_counts.at(above);
    up_counts[node] = total;
  }
  return up_counts.at(x.v());
}

}  // namespace richgrass
