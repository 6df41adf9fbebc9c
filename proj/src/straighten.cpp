#include "richgrass/straighten.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace richgrass {

Monomial::Monomial(std::vector<PluckerIndex> factors) : factors_(std::move(factors)) {
  for (const auto& f : factors_) {
    if (f.size() != factors_.front().size())
      throw std::invalid_argument("monomial factors from different grassmannians");
  }
}

bool Monomial::is_standard() const { return !first_violation().has_value(); }

std::optional<int> Monomial::first_violation() const {
  for (size_t t = 1; t < factors_.size(); ++t)
    if (!bruhat_leq(factors_[t], factors_[t - 1])) return static_cast<int>(t) + 1;
  return std::nullopt;
}

Monomial Monomial::canonical() const {
  std::vector<PluckerIndex> sorted = factors_;
  std::sort(sorted.begin(), sorted.end(),
            [](const PluckerIndex& a, const PluckerIndex& b) { return b < a; });
  return Monomial(std::move(sorted));
}

Monomial Monomial::parse(const std::string& text) {
  std::vector<PluckerIndex> factors;
  std::stringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ';'))
    if (!piece.empty()) factors.push_back(PluckerIndex::parse(piece));
  return Monomial(std::move(factors));
}

std::string Monomial::str() const {
  std::string out;
  for (size_t t = 0; t < factors_.size(); ++t) {
    if (t > 0) out += ';';
    out += factors_[t].str();
  }
  return out;
}

void Combination::add(const Monomial& m, const Int& coefficient) {
  if (coefficient == 0) return;
  Monomial key = m.canonical();
  if (!terms_.empty() && terms_.begin()->first.degree() != key.degree())
    throw std::logic_error("mixing degrees in one combination");
  auto [it, inserted] = terms_.emplace(std::move(key), coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

namespace {

// Parity of the permutation sorting `values` ascending: +1 or -1.
int sort_sign(const std::vector<int>& values) {
  int inversions = 0;
  for (size_t i = 0; i < values.size(); ++i)
    for (size_t j = i + 1; j < values.size(); ++j)
      if (values[i] > values[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

bool has_duplicate(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  return std::adjacent_find(values.begin(), values.end()) != values.end();
}

// Orders a factor pair descending lexicographically; for a comparable pair
// that is the weakly decreasing (standard) arrangement.
std::pair<PluckerIndex, PluckerIndex> ordered_pair(PluckerIndex a, PluckerIndex b) {
  if (a < b) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

}  // namespace

std::vector<std::pair<Int, Monomial>> shuffle_step(const PluckerIndex& a,
                                                   const PluckerIndex& b) {
  if (bruhat_leq(b, a))
    throw std::invalid_argument("shuffle step needs a violation, got " + a.str() +
                                " >= " + b.str());
  const int d = a.size();
  // First position where the pair crosses.
  int s = 0;
  for (int t = 0; t < d; ++t)
    if (a.entries()[t] < b.entries()[t]) {
      s = t + 1;
      break;
    }

  // Exchange window: the head a_1..a_s and the tail b_s..b_d, d+1 entries in
  // all. Summing the two resulting minors over every order-preserving split
  // of the window, with permutation signs, antisymmetrizes d+1 rows in d
  // columns and therefore vanishes; the identity split is p_a p_b itself.
  std::vector<int> window;
  for (int t = 0; t < s; ++t) window.push_back(a.entries()[t]);
  for (int t = s - 1; t < d; ++t) window.push_back(b.entries()[t]);
  const int window_size = d + 1;
  const int head_block = s;  // entries returning to the a-side

  std::vector<std::pair<Int, Monomial>> terms;
  std::vector<int> chosen(head_block);
  // Iterate subsets of {0..d} of size head_block in lexicographic order.
  for (int t = 0; t < head_block; ++t) chosen[t] = t;
  for (;;) {
    // The identity split reproduces p_a p_b itself; every other split is
    // moved to the right hand side of the syzygy, hence the flipped sign.
    bool identity = true;
    for (int t = 0; t < head_block; ++t)
      if (chosen[t] != t) {
        identity = false;
        break;
      }
    if (!identity) {
      // Sign of the shuffle: inversions between the chosen block and its
      // complement in the window order.
      int crossings = 0;
      std::vector<bool> in_first(window_size, false);
      for (int pos : chosen) in_first[pos] = true;
      for (int i = 0; i < window_size; ++i)
        if (!in_first[i])
          for (int j = i + 1; j < window_size; ++j)
            if (in_first[j]) ++crossings;
      int sign = crossings % 2 == 0 ? -1 : 1;

      std::vector<int> first_entries, second_entries;
      for (int pos : chosen) first_entries.push_back(window[pos]);
      for (int t = s; t < d; ++t) first_entries.push_back(a.entries()[t]);
      for (int t = 0; t < s - 1; ++t) second_entries.push_back(b.entries()[t]);
      for (int i = 0; i < window_size; ++i)
        if (!in_first[i]) second_entries.push_back(window[i]);

      if (!has_duplicate(first_entries) && !has_duplicate(second_entries)) {
        sign *= sort_sign(first_entries) * sort_sign(second_entries);
        terms.emplace_back(Int(sign),
                           Monomial({PluckerIndex(std::move(first_entries)),
                                     PluckerIndex(std::move(second_entries))}));
      }
    }

    // Next subset.
    int t = head_block - 1;
    while (t >= 0 && chosen[t] == window_size - head_block + t) --t;
    if (t < 0) break;
    ++chosen[t];
    for (int u = t + 1; u < head_block; ++u) chosen[u] = chosen[u - 1] + 1;
  }
  return terms;
}

namespace {

using RelationKey = std::tuple<int, int, PluckerIndex, PluckerIndex>;

std::map<RelationKey, Combination>& relation_cache() {
  static std::map<RelationKey, Combination> cache;
  return cache;
}

std::mutex& relation_mutex() {
  static std::mutex m;
  return m;
}

void certify_relation(const GrassContext& ctx, const PluckerIndex& a,
                      const PluckerIndex& b, const Combination& relation) {
  // Fixed internal seed: certification is deterministic and happens once per
  // cached relation.
  Rng rng(0x5ee1u);
  for (int trial = 0; trial < 10; ++trial) {
    const MatrixPoint m = random_matrix(ctx, rng);
    Rat lhs = plucker(m, a) * plucker(m, b);
    if (lhs != evaluate(relation, m))
      throw std::logic_error("straightening relation for " + a.str() + " * " +
                             b.str() + " failed evaluation certification");
  }
}

}  // namespace

Combination quadratic_relation(const GrassContext& ctx, const PluckerIndex& a,
                               const PluckerIndex& b) {
  ctx.validate(a);
  ctx.validate(b);
  if (bruhat_comparable(a, b))
    throw std::invalid_argument("quadratic relation needs a non-comparable pair, got " +
                                a.str() + " and " + b.str());

  const auto [x, y] = ordered_pair(a, b);
  const RelationKey key{ctx.d(), ctx.n(), x, y};
  {
    std::lock_guard<std::mutex> lock(relation_mutex());
    auto it = relation_cache().find(key);
    if (it != relation_cache().end()) return it->second;
  }

  // Iterate the exchange step until every term is a Bruhat chain. The
  // classical straightening argument bounds the iteration; the step cap
  // turns a would-be loop into a loud failure.
  Combination result;
  std::deque<std::pair<Int, Monomial>> work;
  work.emplace_back(Int(1), Monomial({x, y}));
  int steps = 0;
  while (!work.empty()) {
    if (++steps > 100000)
      throw std::logic_error("degree-2 straightening exceeded its step bound");
    auto [coeff, mono] = work.front();
    work.pop_front();
    const auto [u, v] = ordered_pair(mono.factors()[0], mono.factors()[1]);
    if (bruhat_leq(v, u)) {
      result.add(Monomial({u, v}), coeff);
      continue;
    }
    for (auto& [sign, term] : shuffle_step(u, v))
      work.emplace_back(coeff * sign, std::move(term));
  }

  for (const auto& [mono, coeff] : result.terms()) {
    if (coeff != 1 && coeff != -1)
      throw std::logic_error("straightening relation for " + x.str() + " * " +
                             y.str() + " produced a coefficient " + coeff.get_str() +
                             " outside +-1");
    (void)mono;
  }
  certify_relation(ctx, x, y, result);

  std::lock_guard<std::mutex> lock(relation_mutex());
  return relation_cache().emplace(key, std::move(result)).first->second;
}

Int chain_measure(const GrassContext& ctx, const std::vector<PluckerIndex>& factors) {
  const Int base = Int(ctx.d()) * (ctx.n() - ctx.d()) + 1;
  Int measure = 0;
  for (const auto& f : factors) measure = measure * base + length(f);
  return measure;
}

Combination straighten(const GrassContext& ctx, const Monomial& m) {
  for (const auto& f : m.factors()) ctx.validate(f);

  Combination result;
  if (m.degree() == 0) {
    result.add(m, 1);
    return result;
  }

  std::deque<std::pair<Int, std::vector<PluckerIndex>>> work;
  work.emplace_back(Int(1), m.canonical().factors());
  while (!work.empty()) {
    auto [coeff, seq] = work.front();
    work.pop_front();

    // Commutativity pass: put comparable adjacent factors in weakly
    // decreasing position. Each swap moves the longer factor to the heavier
    // digit of the measure, so the measure only grows.
    bool swapped = true;
    while (swapped) {
      swapped = false;
      for (size_t i = 0; i + 1 < seq.size(); ++i) {
        if (!bruhat_leq(seq[i + 1], seq[i]) && bruhat_leq(seq[i], seq[i + 1])) {
          std::swap(seq[i], seq[i + 1]);
          swapped = true;
        }
      }
    }

    const Monomial current{std::vector<PluckerIndex>(seq)};
    const auto violation = current.first_violation();
    if (!violation) {
      result.add(current, coeff);
      continue;
    }
    const size_t t = static_cast<size_t>(*violation) - 1;  // index of the second factor
    const Int measure = chain_measure(ctx, seq);
    const Combination relation = quadratic_relation(ctx, seq[t - 1], seq[t]);
    for (const auto& [term, sign] : relation.terms()) {
      std::vector<PluckerIndex> next = seq;
      next[t - 1] = term.factors()[0];
      next[t] = term.factors()[1];
      if (chain_measure(ctx, next) <= measure)
        throw std::logic_error("straightening measure failed to increase at " +
                               current.str());
      work.emplace_back(coeff * sign, std::move(next));
    }
  }
  return result;
}

Combination restrict_to(const Combination& c, const RichardsonId& x) {
  Combination out;
  for (const auto& [mono, coeff] : c.terms()) {
    bool survives = true;
    for (const auto& f : mono.factors())
      if (!in_interval(x, f)) {
        survives = false;
        break;
      }
    if (survives) out.add(mono, coeff);
  }
  return out;
}

Rat evaluate(const Monomial& m, const MatrixPoint& point) {
  Rat value(1);
  for (const auto& f : m.factors()) value *= plucker(point, f);
  return value;
}

Rat evaluate(const Combination& c, const MatrixPoint& point) {
  Rat total(0);
  for (const auto& [mono, coeff] : c.terms()) total += Rat(coeff) * evaluate(mono, point);
  return total;
}

}  // namespace richgrass
