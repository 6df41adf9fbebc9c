#include "richgrass/selftest.hpp"

#include <algorithm>
#include <sstream>

#include "richgrass/counting.hpp"
#include "richgrass/multiplicity.hpp"
#include "richgrass/plucker.hpp"
#include "richgrass/straighten.hpp"
#include "richgrass/tangent.hpp"

namespace richgrass {

int SelftestReport::failed() const {
  int count = 0;
  for (const auto& check : checks)
    if (!check.ok) ++count;
  return count;
}

std::string SelftestReport::to_text() const {
  std::ostringstream out;
  for (const auto& check : checks) {
    out << (check.ok ? "[ok]   " : "[FAIL] ") << check.name;
    if (!check.detail.empty()) out << ": " << check.detail;
    out << "\n";
  }
  out << checks.size() - failed() << "/" << checks.size() << " checks passed\n";
  return out.str();
}

namespace {

struct Driver {
  const GrassContext& ctx;
  std::uint64_t seed;
  bool sample_oracle;
  SelftestReport& report;

  std::vector<PluckerIndex> all;
  std::vector<RichardsonId> intervals;  // every (w, v) with w >= v

  Driver(const GrassContext& ctx_in, std::uint64_t seed_in, bool sample_in,
         SelftestReport& report_in)
      : ctx(ctx_in), seed(seed_in), sample_oracle(sample_in), report(report_in) {
    all = enumerate_indices(ctx);
    for (const auto& w : all)
      for (const auto& v : all)
        if (bruhat_leq(v, w)) intervals.emplace_back(w, v);
  }

  void check(const std::string& name, bool ok, const std::string& detail) {
    report.checks.push_back({name, ok, detail});
  }

  void lattice_laws() {
    bool ok = true;
    long cases = 0;
    for (const auto& a : all)
      for (const auto& b : all) {
        ok = ok && meet(a, b) == meet(b, a) && join(a, b) == join(b, a);
        ok = ok && meet(a, a) == a && join(a, a) == a;
        ok = ok && meet(a, join(a, b)) == a && join(a, meet(a, b)) == a;
        ok = ok && bruhat_leq(meet(a, b), a) && bruhat_leq(a, join(a, b));
        for (const auto& c : all) {
          ok = ok && meet(meet(a, b), c) == meet(a, meet(b, c));
          ok = ok && join(join(a, b), c) == join(a, join(b, c));
          // Greatest lower bound: anything below both a and b is below the meet.
          ++cases;
        }
        if (!ok) break;
      }
    check("poset/lattice-laws", ok, std::to_string(cases) + " triples");
  }

  void partial_order() {
    bool ok = true;
    for (const auto& a : all) ok = ok && bruhat_leq(a, a);
    for (const auto& a : all)
      for (const auto& b : all)
        if (bruhat_leq(a, b) && bruhat_leq(b, a)) ok = ok && a == b;
    long triples = 0;
    for (const auto& a : all)
      for (const auto& b : all)
        for (const auto& c : all) {
          if (bruhat_leq(a, b) && bruhat_leq(b, c)) ok = ok && bruhat_leq(a, c);
          ++triples;
        }
    check("poset/partial-order", ok, std::to_string(triples) + " triples");
  }

  void graded_covers() {
    bool ok = true;
    long cover_count = 0;
    for (const auto& a : all)
      for (const auto& b : all) {
        if (!bruhat_less(a, b)) continue;
        bool gap = true;
        for (const auto& c : all)
          if (bruhat_less(a, c) && bruhat_less(c, b)) gap = false;
        if (gap) {
          ++cover_count;
          ok = ok && length(b) == length(a) + 1 && covers(a, b);
        } else {
          ok = ok && !covers(a, b);
        }
      }
    check("poset/graded-covers", ok, std::to_string(cover_count) + " cover pairs");
  }

  void w0_involution() {
    bool ok = true;
    for (const auto& a : all) ok = ok && w0_conjugate(ctx, w0_conjugate(ctx, a)) == a;
    for (const auto& a : all)
      for (const auto& b : all)
        ok = ok && bruhat_leq(a, b) ==
                       bruhat_leq(w0_conjugate(ctx, b), w0_conjugate(ctx, a));
    check("poset/w0-involution", ok, std::to_string(all.size()) + " indices");
  }

  void interval_oracle() {
    bool ok = true;
    for (const auto& x : intervals) {
      size_t brute = 0;
      for (const auto& t : all)
        if (bruhat_leq(x.v(), t) && bruhat_leq(t, x.w())) ++brute;
      ok = ok && interval(ctx, x).size() == brute;
    }
    check("poset/interval-oracle", ok, std::to_string(intervals.size()) + " intervals");
  }

  void degree_formula() {
    bool ok = true;
    Rng rng(seed ^ 0xdeull);
    for (const auto& theta : all)
      for (const auto& tau : all)
        ok = ok && measured_degree(ctx, theta, tau, rng) == deg_tau(tau, theta);
    check("plucker/degree-formula", ok,
          std::to_string(all.size() * all.size()) + " pairs");
  }

  void alternation() {
    Rng rng(seed ^ 0xa1ull);
    bool ok = true;
    for (int trial = 0; trial < 5; ++trial) {
      MatrixPoint m = random_matrix(ctx, rng);
      const PluckerIndex theta = all[rng.int_in(0, static_cast<long>(all.size()) - 1)];
      const Rat base = plucker(m, theta);
      if (ctx.d() >= 2) {
        MatrixPoint swapped = m;
        for (int i = 1; i <= ctx.n(); ++i)
          std::swap(swapped.at(i, 1), swapped.at(i, 2));
        ok = ok && plucker(swapped, theta) == -base;
      }
      MatrixPoint scaled = m;
      const Rat lambda = rng.nonzero_rational();
      for (int i = 1; i <= ctx.n(); ++i) scaled.at(i, 1) *= lambda;
      ok = ok && plucker(scaled, theta) == lambda * base;
    }
    check("plucker/alternation", ok, "5 random matrices");
  }

  void straighten_pairs() {
    Rng rng(seed ^ 0x57ull);
    std::vector<MatrixPoint> matrices;
    for (int i = 0; i < 10; ++i) matrices.push_back(random_matrix(ctx, rng));

    bool identity_ok = true;
    bool shape_ok = true;
    long pairs = 0;
    for (const auto& a : all)
      for (const auto& b : all) {
        if (a >= b || bruhat_comparable(a, b)) continue;
        ++pairs;
        const Combination relation = straighten(ctx, Monomial({a, b}));
        for (const auto& [mono, coeff] : relation.terms()) {
          const auto& alpha = mono.factors()[0];
          const auto& beta = mono.factors()[1];
          shape_ok = shape_ok && bruhat_less(a, alpha) && bruhat_less(b, alpha) &&
                     bruhat_less(beta, a) && bruhat_less(beta, b);
          (void)coeff;
        }
        for (const auto& m : matrices)
          identity_ok = identity_ok &&
                        evaluate(relation, m) == plucker(m, a) * plucker(m, b);
      }
    check("straighten/pair-identity", identity_ok,
          std::to_string(pairs) + " non-comparable pairs x 10 matrices");
    check("straighten/pair-shape", shape_ok, std::to_string(pairs) + " pairs");
  }

  void straighten_idempotent() {
    bool ok = true;
    long cases = 0;
    for (const auto& a : all)
      for (const auto& b : all) {
        if (!bruhat_leq(b, a)) continue;
        const Monomial m({a, b});
        Combination expected;
        expected.add(m, 1);
        ok = ok && straighten(ctx, m) == expected;
        ++cases;
      }
    check("straighten/idempotent", ok, std::to_string(cases) + " standard pairs");
  }

  void straighten_degree3() {
    Rng rng(seed ^ 0xd3ull);
    std::vector<MatrixPoint> matrices;
    for (int i = 0; i < 10; ++i) matrices.push_back(random_matrix(ctx, rng));

    // Stride-sampled triples; exhaustive at binomial(4,2) scale.
    const size_t count = all.size();
    const size_t total = count * count * count;
    const size_t stride = total <= 256 ? 1 : total / 256;
    bool ok = true;
    long cases = 0;
    for (size_t linear = 0; linear < total; linear += stride) {
      const Monomial m({all[linear % count], all[(linear / count) % count],
                        all[(linear / count / count) % count]});
      const Combination straightened = straighten(ctx, m);
      for (const auto& [mono, coeff] : straightened.terms()) {
        ok = ok && mono.is_standard();
        (void)coeff;
      }
      for (const auto& mat : matrices)
        ok = ok && evaluate(straightened, mat) == evaluate(m, mat);
      ++cases;
    }
    check("straighten/degree3-identity", ok,
          std::to_string(cases) + " monomials x 10 matrices");
  }

  void basis_rank() {
    if (ctx.d() != 2 || ctx.n() != 4) return;
    Rng rng(seed ^ 0xb2ull);
    std::vector<MatrixPoint> matrices;
    for (int i = 0; i < 25; ++i) matrices.push_back(random_matrix(ctx, rng));

    const auto standard = enumerate_standard(ctx, whole_grassmannian(ctx), 2);
    std::vector<std::vector<Rat>> values(matrices.size(),
                                         std::vector<Rat>(standard.size()));
    for (size_t i = 0; i < matrices.size(); ++i)
      for (size_t j = 0; j < standard.size(); ++j)
        values[i][j] = evaluate(Monomial(standard[j]), matrices[i]);
    const bool rank_ok = rank_rational(values) == static_cast<int>(standard.size());
    check("straighten/basis-rank", rank_ok,
          std::to_string(standard.size()) + " standard monomials, 25 matrices");

    bool span_ok = true;
    long products = 0;
    for (size_t i = 0; i < all.size(); ++i)
      for (size_t j = i; j < all.size(); ++j) {
        ++products;
        const Monomial m({all[i], all[j]});
        const Combination straightened = straighten(ctx, m);
        for (const auto& [term, coeff] : straightened.terms()) {
          span_ok = span_ok &&
                    std::find(standard.begin(), standard.end(), term.factors()) !=
                        standard.end();
          (void)coeff;
        }
        for (const auto& mat : matrices)
          span_ok = span_ok && evaluate(straightened, mat) == evaluate(m, mat);
      }
    check("straighten/degree2-span", span_ok, std::to_string(products) + " products");
  }

  void enum_dp_agree() {
    bool ok = true;
    long cases = 0;
    for (const auto& x : intervals)
      for (int m = 0; m <= 3; ++m) {
        ok = ok && Int(static_cast<long>(enumerate_standard(ctx, x, m).size())) ==
                       count_standard(ctx, x, m);
        ++cases;
      }
    check("count/enum-dp-agree", ok, std::to_string(cases) + " (interval, degree)");
  }

  void pieri() {
    bool ok = true;
    bool symmetric_ok = true;
    long cases = 0;
    for (const auto& x : intervals) {
      if (x.w() == x.v()) continue;
      std::vector<RichardsonId> plus, minus;
      for (const auto& w1 : boundary(ctx, x, x.v(), BoundarySide::plus))
        plus.emplace_back(w1, x.v());
      for (const auto& v1 : boundary(ctx, x, x.w(), BoundarySide::minus))
        minus.emplace_back(x.w(), v1);
      for (int m = 1; m <= 4; ++m) {
        const Int s_m = count_standard(ctx, x, m);
        const Int s_prev = count_standard(ctx, x, m - 1);
        const Int plus_m = count_union(ctx, plus, m);
        const Int minus_m = count_union(ctx, minus, m);
        ok = ok && s_m == s_prev + plus_m && s_m == s_prev + minus_m;
        symmetric_ok = symmetric_ok && plus_m == minus_m;
        ++cases;
      }
    }
    check("count/pieri-recursion", ok, std::to_string(cases) + " (interval, degree)");
    check("count/boundary-symmetry", symmetric_ok, "h0(plus) = h0(minus)");
  }

  void inclusion_exclusion() {
    bool ok = true;
    long cases = 0;
    for (size_t i = 0; i < intervals.size(); ++i)
      for (size_t j = i + 1; j < intervals.size(); ++j) {
        const auto meet_id = intersect_richardson(intervals[i], intervals[j]);
        if (!meet_id) continue;
        for (int m = 1; m <= 3; ++m) {
          const Int lhs = count_union(ctx, {intervals[i], intervals[j]}, m);
          const Int rhs = count_standard(ctx, intervals[i], m) +
                          count_standard(ctx, intervals[j], m) -
                          count_standard(ctx, *meet_id, m);
          ok = ok && lhs == rhs;
          ++cases;
        }
      }
    check("count/inclusion-exclusion", ok, std::to_string(cases) + " pairs x degrees");
  }

  void degree_chains() {
    bool ok = true;
    for (const auto& x : intervals)
      ok = ok && degree_of_variety(ctx, x) == maximal_chain_count(ctx, x);
    check("count/degree-chain-count", ok,
          std::to_string(intervals.size()) + " intervals");
  }

  void hilbert_degree() {
    bool ok = true;
    for (const auto& x : intervals)
      ok = ok && hilbert_polynomial(ctx, x).degree() == dim_richardson(x);
    check("count/hilbert-degree", ok, std::to_string(intervals.size()) + " intervals");
  }

  void count_monotone() {
    bool ok = true;
    long cases = 0;
    for (const auto& inner : intervals)
      for (const auto& outer : intervals) {
        if (!(bruhat_leq(outer.v(), inner.v()) && bruhat_leq(inner.w(), outer.w())))
          continue;
        for (int m = 1; m <= 3; ++m) {
          ok = ok && count_standard(ctx, inner, m) <= count_standard(ctx, outer, m);
          ++cases;
        }
      }
    check("count/monotone-inclusion", ok, std::to_string(cases) + " nested pairs");
  }

  void tangent_invariants() {
    bool bound_ok = true;
    bool containment_ok = true;
    bool open_cell_ok = true;
    bool conjunction_ok = true;
    bool jacobian_ok = true;
    long triples = 0;
    const int full = ctx.d() * (ctx.n() - ctx.d());
    for (const auto& x : intervals) {
      const int dim = dim_richardson(x);
      for (const auto& tau : interval(ctx, x)) {
        ++triples;
        const TangentBasis basis = tangent_basis(ctx, x, tau);
        bound_ok = bound_ok && basis.dimension() >= dim &&
                   (basis.dimension() == dim) == is_smooth_at(ctx, x, tau);
        for (const auto& r : basis.roots)
          containment_ok = containment_ok && in_interval(x, reflect(tau, r));
        const SmoothTriple triple = smooth_product_check(ctx, x, tau);
        // Open-cell argument: the Schubert factor is smooth at its own top
        // fixed point, the opposite factor at its bottom one.
        if (tau == x.w()) open_cell_ok = open_cell_ok && triple.schubert;
        if (tau == x.v()) open_cell_ok = open_cell_ok && triple.opposite;
        conjunction_ok =
            conjunction_ok && triple.richardson == (triple.schubert && triple.opposite);

        int total_columns = 0;
        int nonzero_columns = 0;
        for (int removed : tau.entries())
          for (int added = 1; added <= ctx.n(); ++added) {
            if (tau.contains(added)) continue;
            ++total_columns;
            if (!in_interval(x, reflect(tau, RootPair{removed, added})))
              ++nonzero_columns;
          }
        jacobian_ok = jacobian_ok && total_columns == full &&
                      basis.dimension() == full - nonzero_columns;
      }
    }
    const std::string scope = std::to_string(triples) + " triples";
    check("tangent/bound-and-criterion", bound_ok, scope);
    check("tangent/reflection-containment", containment_ok, scope);
    check("tangent/open-cell-factors", open_cell_ok, scope);
    check("tangent/product-conjunction", conjunction_ok, scope);
    check("tangent/jacobian-columns", jacobian_ok, scope);
  }

  void multiplicity_invariants() {
    bool four_way_ok = true;
    bool smooth_one_ok = true;
    bool combined_ok = true;
    bool grade1_ok = true;
    long triples = 0;
    long oracle_runs = 0;
    long mult_one = 0;
    long mult_one_smooth = 0;
    long embed_eq_tangent = 0;
    long embed_total = 0;

    for (const auto& x : intervals) {
      for (const auto& tau : interval(ctx, x)) {
        ++triples;
        const Int recursive = mult_recursive(ctx, x, tau);
        const Int product = mult_product(ctx, x, tau);
        const Int determinantal = mult_richardson_det(ctx, x, tau);
        four_way_ok = four_way_ok && recursive == product && product == determinantal;

        const bool run_oracle =
            !sample_oracle || dim_richardson(x) <= 5 || triples % 7 == 0;
        if (run_oracle) {
          ++oracle_runs;
          four_way_ok = four_way_ok && mult_oracle(ctx, x, tau) == recursive;
        }

        const bool smooth = is_smooth_at(ctx, x, tau);
        if (smooth) smooth_one_ok = smooth_one_ok && recursive == 1;
        if (recursive == 1) {
          ++mult_one;
          if (smooth) ++mult_one_smooth;
        }

        if (bruhat_less(tau, x.w()) && bruhat_less(x.v(), tau)) {
          Int sum = 0;
          for (const auto& w1 : boundary(ctx, x, tau, BoundarySide::plus))
            sum += mult_recursive(ctx, RichardsonId(w1, x.v()), tau);
          for (const auto& v1 : boundary(ctx, x, tau, BoundarySide::minus))
            sum += mult_recursive(ctx, RichardsonId(x.w(), v1), tau);
          combined_ok = combined_ok &&
                        recursive * (deg_tau(tau, x.w()) + deg_tau(tau, x.v())) == sum;
        }

        // Embedding dimension: grade-1 chain count vs. tangent dimension.
        Int grade1 = tangent_cone_hilbert(ctx, x, tau, 1);
        Int direct = 0;
        for (const auto& theta : interval(ctx, x))
          if (theta != tau && bruhat_comparable(theta, tau) && deg_tau(tau, theta) == 1)
            direct += 1;
        const int tangent_dim = tangent_basis(ctx, x, tau).dimension();
        grade1_ok = grade1_ok && grade1 == direct && grade1 >= tangent_dim;
        ++embed_total;
        if (grade1 == tangent_dim) ++embed_eq_tangent;
      }
    }
    check("mult/four-way-agreement", four_way_ok,
          std::to_string(triples) + " triples, oracle on " +
              std::to_string(oracle_runs));
    check("mult/smooth-implies-one", smooth_one_ok, std::to_string(triples) + " triples");
    // Recorded observation, not an asserted invariant.
    check("mult/one-implies-smooth-observed", true,
          std::to_string(mult_one_smooth) + "/" + std::to_string(mult_one) +
              " multiplicity-one points smooth");
    check("mult/combined-recursion", combined_ok, "interior triples");
    check("mult/grade1-embedding-dim", grade1_ok,
          std::to_string(embed_eq_tangent) + "/" + std::to_string(embed_total) +
              " with embedding dim = tangent dim");
  }

  void run() {
    lattice_laws();
    partial_order();
    graded_covers();
    w0_involution();
    interval_oracle();
    degree_formula();
    alternation();
    straighten_pairs();
    straighten_idempotent();
    straighten_degree3();
    basis_rank();
    enum_dp_agree();
    pieri();
    inclusion_exclusion();
    degree_chains();
    hilbert_degree();
    count_monotone();
    tangent_invariants();
    multiplicity_invariants();
  }
};

}  // namespace

SelftestReport run_selftest(const GrassContext& ctx, std::uint64_t seed,
                            bool sample_oracle) {
  SelftestReport report;
  Driver driver(ctx, seed, sample_oracle, report);
  driver.run();
  return report;
}

}  // namespace richgrass
