#include "richgrass/poset.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace richgrass {

GrassContext::GrassContext(int d, int n) : d_(d), n_(n) {
  if (!(1 <= d && d < n))
    throw std::invalid_argument("grassmannian parameters need 1 <= d < n");
}

Int GrassContext::index_count() const { return binomial(n_, d_); }

PluckerIndex GrassContext::bottom() const {
  std::vector<int> entries(d_);
  for (int t = 0; t < d_; ++t) entries[t] = t + 1;
  return PluckerIndex(std::move(entries));
}

PluckerIndex GrassContext::top() const {
  std::vector<int> entries(d_);
  for (int t = 0; t < d_; ++t) entries[t] = n_ - d_ + t + 1;
  return PluckerIndex(std::move(entries));
}

void GrassContext::validate(const PluckerIndex& index) const {
  if (index.size() != d_)
    throw std::invalid_argument("index has " + std::to_string(index.size()) +
                                " entries, expected " + std::to_string(d_));
  for (int e : index.entries())
    if (e < 1 || e > n_)
      throw std::invalid_argument("index entry " + std::to_string(e) +
                                  " outside [1, " + std::to_string(n_) + "]");
}

GrassContext GrassContext::parse(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("expected \"d,n\", got: " + text);
  try {
    size_t used = 0;
    int d = std::stoi(text.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(text);
    std::string rest = text.substr(comma + 1);
    int n = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    return GrassContext(d, n);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("malformed grassmannian parameters: " + text);
  }
}

PluckerIndex::PluckerIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("empty index");
  std::sort(entries_.begin(), entries_.end());
  for (size_t t = 0; t < entries_.size(); ++t) {
    if (entries_[t] < 1)
      throw std::invalid_argument("index entries must be positive");
    if (t > 0 && entries_[t] == entries_[t - 1])
      throw std::invalid_argument("index entries must be distinct");
  }
}

PluckerIndex PluckerIndex::parse(const std::string& text) {
  std::vector<int> entries;
  std::stringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    try {
      size_t used = 0;
      entries.push_back(std::stoi(piece, &used));
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("malformed index: " + text);
    }
  }
  if (entries.empty()) throw std::invalid_argument("malformed index: " + text);
  return PluckerIndex(std::move(entries));
}

bool PluckerIndex::contains(int value) const {
  return std::binary_search(entries_.begin(), entries_.end(), value);
}

std::string PluckerIndex::str() const {
  std::string out;
  for (size_t t = 0; t < entries_.size(); ++t) {
    if (t > 0) out += ',';
    out += std::to_string(entries_[t]);
  }
  return out;
}

RichardsonId::RichardsonId(PluckerIndex w, PluckerIndex v)
    : w_(std::move(w)), v_(std::move(v)) {
  if (!bruhat_leq(v_, w_))
    throw std::domain_error("empty richardson variety: w = " + w_.str() +
                            " is not >= v = " + v_.str());
}

std::optional<RichardsonId> RichardsonId::try_make(PluckerIndex w, PluckerIndex v) {
  if (!bruhat_leq(v, w)) return std::nullopt;
  return RichardsonId(std::move(w), std::move(v));
}

std::vector<PluckerIndex> enumerate_indices(const GrassContext& ctx) {
  const int d = ctx.d();
  const int n = ctx.n();
  std::vector<PluckerIndex> out;
  std::vector<int> current(d);
  for (int t = 0; t < d; ++t) current[t] = t + 1;
  while (true) {
    out.emplace_back(current);
    // Advance to the next d-subset in lexicographic order.
    int t = d - 1;
    while (t >= 0 && current[t] == n - d + t + 1) --t;
    if (t < 0) break;
    ++current[t];
    for (int s = t + 1; s < d; ++s) current[s] = current[s - 1] + 1;
  }
  return out;
}

namespace {

void require_same_size(const PluckerIndex& a, const PluckerIndex& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("indices from different grassmannians: " + a.str() +
                                " vs " + b.str());
}

}  // namespace

bool bruhat_leq(const PluckerIndex& a, const PluckerIndex& b) {
  require_same_size(a, b);
  for (int t = 0; t < a.size(); ++t)
    if (a.entries()[t] > b.entries()[t]) return false;
  return true;
}

bool bruhat_less(const PluckerIndex& a, const PluckerIndex& b) {
  return a != b && bruhat_leq(a, b);
}

bool bruhat_comparable(const PluckerIndex& a, const PluckerIndex& b) {
  return bruhat_leq(a, b) || bruhat_leq(b, a);
}

PluckerIndex meet(const PluckerIndex& a, const PluckerIndex& b) {
  require_same_size(a, b);
  std::vector<int> entries(a.size());
  for (int t = 0; t < a.size(); ++t)
    entries[t] = std::min(a.entries()[t], b.entries()[t]);
  return PluckerIndex(std::move(entries));
}

PluckerIndex join(const PluckerIndex& a, const PluckerIndex& b) {
  require_same_size(a, b);
  std::vector<int> entries(a.size());
  for (int t = 0; t < a.size(); ++t)
    entries[t] = std::max(a.entries()[t], b.entries()[t]);
  return PluckerIndex(std::move(entries));
}

std::optional<RichardsonId> intersect_richardson(const RichardsonId& x1,
                                                 const RichardsonId& x2) {
  return RichardsonId::try_make(meet(x1.w(), x2.w()), join(x1.v(), x2.v()));
}

int length(const PluckerIndex& a) {
  int total = 0;
  for (int t = 0; t < a.size(); ++t) total += a.entries()[t] - (t + 1);
  return total;
}

int dim_richardson(const RichardsonId& x) { return length(x.w()) - length(x.v()); }

std::vector<PluckerIndex> interval(const GrassContext& ctx, const RichardsonId& x) {
  ctx.validate(x.w());
  ctx.validate(x.v());
  std::vector<PluckerIndex> out;
  for (const auto& tau : enumerate_indices(ctx))
    if (bruhat_leq(x.v(), tau) && bruhat_leq(tau, x.w())) out.push_back(tau);
  return out;
}

bool covers(const PluckerIndex& a, const PluckerIndex& b) {
  return bruhat_less(a, b) && length(b) == length(a) + 1;
}

std::vector<PluckerIndex> boundary(const GrassContext& ctx, const RichardsonId& x,
                                   const PluckerIndex& tau, BoundarySide side) {
  ctx.validate(x.w());
  ctx.validate(x.v());
  ctx.validate(tau);
  require_in_interval(x, tau);
  std::vector<PluckerIndex> out;
  if (side == BoundarySide::plus) {
    if (x.w() == tau)
      throw std::domain_error("plus boundary needs w > tau");
    for (const auto& c : enumerate_indices(ctx))
      if (covers(c, x.w()) && bruhat_leq(tau, c)) out.push_back(c);
  } else {
    if (tau == x.v())
      throw std::domain_error("minus boundary needs tau > v");
    for (const auto& c : enumerate_indices(ctx))
      if (covers(x.v(), c) && bruhat_leq(c, tau)) out.push_back(c);
  }
  return out;
}

PluckerIndex reflect(const PluckerIndex& tau, const RootPair& r) {
  if (!tau.contains(r.removed))
    throw std::invalid_argument("reflect: " + std::to_string(r.removed) +
                                " is not an entry of " + tau.str());
  if (tau.contains(r.added))
    throw std::invalid_argument("reflect: " + std::to_string(r.added) +
                                " is already an entry of " + tau.str());
  std::vector<int> entries;
  entries.reserve(tau.size());
  for (int e : tau.entries())
    if (e != r.removed) entries.push_back(e);
  entries.push_back(r.added);
  return PluckerIndex(std::move(entries));
}

PluckerIndex w0_conjugate(const GrassContext& ctx, const PluckerIndex& a) {
  ctx.validate(a);
  std::vector<int> entries;
  entries.reserve(a.size());
  for (int e : a.entries()) entries.push_back(ctx.n() + 1 - e);
  return PluckerIndex(std::move(entries));
}

RichardsonId schubert_variety(const GrassContext& ctx, const PluckerIndex& w) {
  ctx.validate(w);
  return RichardsonId(w, ctx.bottom());
}

RichardsonId opposite_variety(const GrassContext& ctx, const PluckerIndex& v) {
  ctx.validate(v);
  return RichardsonId(ctx.top(), v);
}

RichardsonId whole_grassmannian(const GrassContext& ctx) {
  return RichardsonId(ctx.top(), ctx.bottom());
}

bool in_interval(const RichardsonId& x, const PluckerIndex& tau) {
  return bruhat_leq(x.v(), tau) && bruhat_leq(tau, x.w());
}

void require_in_interval(const RichardsonId& x, const PluckerIndex& tau) {
  if (!in_interval(x, tau))
    throw std::domain_error("tau = " + tau.str() + " outside [" + x.v().str() +
                            ", " + x.w().str() + "]");
}

}  // namespace richgrass
