#include "richgrass/multiplicity.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace richgrass {

int deg_tau(const PluckerIndex& tau, const PluckerIndex& theta) {
  if (tau.size() != theta.size())
    throw std::invalid_argument("indices from different grassmannians");
  int overlap = 0;
  for (int e : theta.entries())
    if (tau.contains(e)) ++overlap;
  return tau.size() - overlap;
}

GradedChainCounter::GradedChainCounter(const GrassContext& ctx, const RichardsonId& x,
                                       const PluckerIndex& tau) {
  ctx.validate(tau);
  require_in_interval(x, tau);
  for (const auto& theta : interval(ctx, x)) {
    if (theta == tau || !bruhat_comparable(theta, tau)) continue;
    elements_.push_back(theta);
    grades_.push_back(deg_tau(tau, theta));
  }
  const size_t size = elements_.size();
  strictly_below_.assign(size, std::vector<bool>(size, false));
  for (size_t i = 0; i < size; ++i)
    for (size_t j = 0; j < size; ++j)
      strictly_below_[i][j] = bruhat_less(elements_[i], elements_[j]);
  memo_.assign(size, {});
}

Int GradedChainCounter::chains_topped_by(size_t element, int grade) const {
  auto& row = memo_[element];
  if (static_cast<int>(row.size()) <= grade) row.resize(grade + 1, Int(-1));
  if (row[grade] >= 0) return row[grade];

  // Chains whose largest factor is exactly elements_[element]: k copies of
  // it on top, then anything strictly below.
  Int total = 0;
  const int step = grades_[element];
  for (int k = 1; k * step <= grade; ++k) {
    const int remaining = grade - k * step;
    if (remaining == 0) {
      total += 1;
      continue;
    }
    for (size_t below = 0; below < elements_.size(); ++below)
      if (strictly_below_[below][element]) total += chains_topped_by(below, remaining);
  }
  row[grade] = total;
  return total;
}

Int GradedChainCounter::count(int grade) const {
  if (grade < 0) throw std::invalid_argument("negative grade");
  if (grade == 0) return 1;
  if (static_cast<int>(totals_.size()) <= grade) totals_.resize(grade + 1, Int(-1));
  if (totals_[grade] >= 0) return totals_[grade];
  Int total = 0;
  for (size_t i = 0; i < elements_.size(); ++i) total += chains_topped_by(i, grade);
  totals_[grade] = total;
  return total;
}

Int tangent_cone_hilbert(const GrassContext& ctx, const RichardsonId& x,
                         const PluckerIndex& tau, int grade) {
  return GradedChainCounter(ctx, x, tau).count(grade);
}

namespace {

using MultKey = std::tuple<int, int, PluckerIndex, PluckerIndex, PluckerIndex>;

std::map<MultKey, Int>& mult_cache() {
  static std::map<MultKey, Int> cache;
  return cache;
}

std::mutex& mult_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

Int mult_recursive(const GrassContext& ctx, const RichardsonId& x,
                   const PluckerIndex& tau) {
  ctx.validate(tau);
  require_in_interval(x, tau);
  if (x.w() == x.v()) return 1;

  const MultKey key{ctx.d(), ctx.n(), x.w(), x.v(), tau};
  {
    std::lock_guard<std::mutex> lock(mult_mutex());
    auto it = mult_cache().find(key);
    if (it != mult_cache().end()) return it->second;
  }

  Int total = 0;
  int divisor = 0;
  if (tau != x.w()) {
    for (const auto& w1 : boundary(ctx, x, tau, BoundarySide::plus))
      total += mult_recursive(ctx, RichardsonId(w1, x.v()), tau);
    divisor = deg_tau(tau, x.w());
  } else {
    for (const auto& v1 : boundary(ctx, x, tau, BoundarySide::minus))
      total += mult_recursive(ctx, RichardsonId(x.w(), v1), tau);
    divisor = deg_tau(tau, x.v());
  }
  if (divisor == 0 || total % divisor != 0)
    throw std::logic_error("boundary recursion divided inexactly at [" +
                           x.v().str() + ", " + x.w().str() + "] tau=" + tau.str());
  Int result = total / divisor;

  std::lock_guard<std::mutex> lock(mult_mutex());
  return mult_cache().emplace(key, std::move(result)).first->second;
}

Int mult_schubert_det(const GrassContext& ctx, const PluckerIndex& w,
                      const PluckerIndex& tau) {
  ctx.validate(w);
  ctx.validate(tau);
  if (!bruhat_leq(tau, w))
    throw std::domain_error("schubert determinant needs w >= tau");
  const int d = ctx.d();

  int kappa_sum = 0;
  std::vector<std::vector<Int>> m(d, std::vector<Int>(d));
  for (int q = 0; q < d; ++q) {
    const int iq = w.entries()[q];
    int kappa = 0;
    for (int tp : tau.entries())
      if (tp > iq) ++kappa;
    kappa_sum += kappa;
    for (int r = 0; r < d; ++r) m[r][q] = binomial(iq, r - kappa);
  }
  Int det = det_bareiss(std::move(m));
  if (kappa_sum % 2 != 0) det = -det;
  if (det < 1)
    throw std::logic_error("schubert multiplicity determinant came out " +
                           det.get_str() + " < 1");
  return det;
}

Int mult_opposite(const GrassContext& ctx, const PluckerIndex& v,
                  const PluckerIndex& tau) {
  ctx.validate(v);
  ctx.validate(tau);
  if (!bruhat_leq(v, tau))
    throw std::domain_error("opposite multiplicity needs tau >= v");
  return mult_schubert_det(ctx, w0_conjugate(ctx, v), w0_conjugate(ctx, tau));
}

Int mult_product(const GrassContext& ctx, const RichardsonId& x,
                 const PluckerIndex& tau) {
  ctx.validate(tau);
  require_in_interval(x, tau);
  return mult_schubert_det(ctx, x.w(), tau) * mult_opposite(ctx, x.v(), tau);
}

Int mult_richardson_det(const GrassContext& ctx, const RichardsonId& x,
                        const PluckerIndex& tau) {
  ctx.validate(tau);
  require_in_interval(x, tau);
  const int d = ctx.d();
  const int n = ctx.n();
  const auto& i = x.w().entries();
  const auto& j = x.v().entries();

  std::vector<int> kappa(d, 0), gamma(d, 0);
  for (int q = 0; q < d; ++q) {
    for (int tp : tau.entries()) {
      if (tp > i[q]) ++kappa[q];
      if (tp < j[q]) ++gamma[q];
    }
  }

  std::vector<std::vector<Int>> first(d, std::vector<Int>(d)),
      second(d, std::vector<Int>(d));
  for (int r = 0; r < d; ++r)
    for (int q = 0; q < d; ++q) {
      first[r][q] = binomial(i[q], r - kappa[q]);
      // Columns of the second factor run through v reversed.
      const int jq = j[d - 1 - q];
      second[r][q] = binomial(n + 1 - jq, r - gamma[d - 1 - q]);
    }

  std::vector<std::vector<Int>> product(d, std::vector<Int>(d, Int(0)));
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c)
      for (int q = 0; q < d; ++q) product[r][c] += first[r][q] * second[q][c];

  int c_sum = 0;
  for (int q = 0; q < d; ++q) c_sum += kappa[q] + gamma[q];
  Int det = det_bareiss(std::move(product));
  if (c_sum % 2 != 0) det = -det;
  if (det < 1)
    throw std::logic_error("richardson multiplicity determinant came out " +
                           det.get_str() + " < 1");
  return det;
}

Int mult_oracle(const GrassContext& ctx, const RichardsonId& x,
                const PluckerIndex& tau) {
  ctx.validate(tau);
  require_in_interval(x, tau);
  const int u = dim_richardson(x);
  if (u == 0) return 1;

  const GradedChainCounter counter(ctx, x, tau);
  // The graded Hilbert function is polynomial for large grades; start the
  // fitting window at the dimension and slide it until three look-ahead
  // values confirm stability.
  for (int window = u; window <= 4 * u; ++window) {
    std::vector<long> points;
    std::vector<Int> values;
    for (int r = window; r < window + u; ++r) {
      points.push_back(r);
      values.push_back(counter.count(r));
    }
    const std::vector<Rat> coeffs = interpolate_at(points, values);
    bool stable = true;
    for (int r = window + u; r < window + u + 3 && stable; ++r) {
      Rat predicted(0), power(1);
      for (const Rat& c : coeffs) {
        predicted += c * power;
        power *= r;
      }
      stable = predicted == Rat(counter.count(r));
    }
    if (!stable) continue;

    const Rat lead = coeffs.back();  // coefficient of r^(u-1)
    const Rat scaled = lead * Rat(factorial(u - 1));
    if (scaled.get_den() != 1 || scaled <= 0) continue;
    return scaled.get_num();
  }
  throw std::logic_error("tangent-cone hilbert function never stabilized for [" +
                         x.v().str() + ", " + x.w().str() + "] tau=" + tau.str());
}

MultiplicityReport mult_all(const GrassContext& ctx, const RichardsonId& x,
                            const PluckerIndex& tau) {
  MultiplicityReport report{
      mult_recursive(ctx, x, tau),
      mult_product(ctx, x, tau),
      mult_richardson_det(ctx, x, tau),
      mult_oracle(ctx, x, tau),
      false,
  };
  report.agree = report.recursive == report.product &&
                 report.product == report.determinantal &&
                 report.determinantal == report.oracle;

  // Combined boundary identity, applicable strictly inside the interval.
  if (bruhat_less(tau, x.w()) && bruhat_less(x.v(), tau)) {
    Int sum = 0;
    for (const auto& w1 : boundary(ctx, x, tau, BoundarySide::plus))
      sum += mult_recursive(ctx, RichardsonId(w1, x.v()), tau);
    for (const auto& v1 : boundary(ctx, x, tau, BoundarySide::minus))
      sum += mult_recursive(ctx, RichardsonId(x.w(), v1), tau);
    const Int combined =
        report.recursive * (deg_tau(tau, x.w()) + deg_tau(tau, x.v()));
    if (combined != sum)
      throw std::logic_error("combined boundary identity failed at [" +
                             x.v().str() + ", " + x.w().str() + "] tau=" + tau.str());
  }
  return report;
}

}  // namespace richgrass
