#include <doctest.h>

#include "richgrass/multiplicity.hpp"
#include "richgrass/tangent.hpp"

using namespace richgrass;

namespace {

PluckerIndex idx(std::initializer_list<int> entries) {
  return PluckerIndex(std::vector<int>(entries));
}

// Hilbert series of the affine cone over a quadric surface: the tangent cone
// of X_{(2,4)} at the bottom fixed point.
Int quadric_cone_series(int r) { return binomial(r + 3, 3) - binomial(r + 1, 3); }

}  // namespace

TEST_CASE("patch degree of a coordinate") {
  CHECK(deg_tau(idx({1, 2}), idx({1, 2})) == 0);
  CHECK(deg_tau(idx({1, 2}), idx({3, 4})) == 2);
  CHECK(deg_tau(idx({1, 2}), idx({2, 3})) == 1);
}

TEST_CASE("boundary recursion") {
  const GrassContext ctx(2, 4);

  const RichardsonId point(idx({1, 3}), idx({1, 3}));
  CHECK(mult_recursive(ctx, point, idx({1, 3})) == 1);

  const RichardsonId schubert_24 = schubert_variety(ctx, idx({2, 4}));
  CHECK(mult_recursive(ctx, schubert_24, idx({1, 2})) == 2);
  CHECK(mult_recursive(ctx, schubert_24, idx({2, 4})) == 1);
}

TEST_CASE("schubert determinant formula") {
  const GrassContext ctx(2, 4);
  CHECK(mult_schubert_det(ctx, idx({2, 4}), idx({1, 2})) == 2);
  CHECK(mult_schubert_det(ctx, idx({2, 4}), idx({1, 3})) == 1);
  CHECK(mult_schubert_det(ctx, idx({2, 4}), idx({2, 4})) == 1);
  CHECK_THROWS_AS(mult_schubert_det(ctx, idx({1, 3}), idx({2, 4})),
                  std::domain_error);
}

TEST_CASE("opposite multiplicity via complement reflection") {
  const GrassContext ctx(2, 4);
  CHECK(mult_opposite(ctx, idx({1, 3}), idx({1, 3})) == 1);
  CHECK(mult_opposite(ctx, idx({1, 3}), idx({2, 4})) == 1);
  CHECK(mult_opposite(ctx, idx({1, 2}), idx({3, 4})) == 1);
  CHECK_THROWS_AS(mult_opposite(ctx, idx({2, 4}), idx({1, 3})), std::domain_error);
}

TEST_CASE("product formula") {
  const GrassContext ctx(2, 4);
  const RichardsonId point(idx({2, 3}), idx({2, 3}));
  CHECK(mult_product(ctx, point, idx({2, 3})) == 1);
  CHECK(mult_product(ctx, schubert_variety(ctx, idx({2, 4})), idx({1, 2})) == 2);
  CHECK(mult_product(ctx, RichardsonId(idx({2, 4}), idx({1, 3})), idx({1, 3})) == 1);
}

TEST_CASE("richardson determinant formula") {
  const GrassContext ctx(2, 4);
  CHECK(mult_richardson_det(ctx, RichardsonId(idx({2, 4}), idx({1, 3})), idx({1, 3})) ==
        1);
  const RichardsonId point(idx({1, 4}), idx({1, 4}));
  CHECK(mult_richardson_det(ctx, point, idx({1, 4})) == 1);
  CHECK(mult_richardson_det(ctx, schubert_variety(ctx, idx({2, 4})), idx({1, 2})) == 2);
}

TEST_CASE("tangent cone hilbert function of the quadric cone") {
  const GrassContext ctx(2, 4);
  const RichardsonId schubert_24 = schubert_variety(ctx, idx({2, 4}));
  const PluckerIndex tau = idx({1, 2});

  CHECK(tangent_cone_hilbert(ctx, schubert_24, tau, 0) == 1);
  CHECK(tangent_cone_hilbert(ctx, schubert_24, tau, 1) == 4);
  CHECK(tangent_cone_hilbert(ctx, schubert_24, tau, 2) == 9);
  for (int r = 0; r <= 6; ++r) {
    CHECK(tangent_cone_hilbert(ctx, schubert_24, tau, r) == Int((r + 1) * (r + 1)));
    CHECK(tangent_cone_hilbert(ctx, schubert_24, tau, r) == quadric_cone_series(r));
  }
}

TEST_CASE("tangent cone oracle") {
  const GrassContext ctx(2, 4);
  const RichardsonId schubert_24 = schubert_variety(ctx, idx({2, 4}));
  CHECK(mult_oracle(ctx, schubert_24, idx({2, 4})) == 1);
  CHECK(mult_oracle(ctx, schubert_24, idx({1, 2})) == 2);

  // Exhaustive agreement with the recursion over the whole context.
  const auto all = enumerate_indices(ctx);
  for (const auto& w : all)
    for (const auto& v : all) {
      if (!bruhat_leq(v, w)) continue;
      const RichardsonId x(w, v);
      for (const auto& tau : interval(ctx, x))
        CHECK(mult_oracle(ctx, x, tau) == mult_recursive(ctx, x, tau));
    }
}

TEST_CASE("all four methods agree") {
  const GrassContext ctx(2, 4);

  const RichardsonId point(idx({2, 4}), idx({2, 4}));
  const MultiplicityReport at_point = mult_all(ctx, point, idx({2, 4}));
  CHECK(at_point.agree);
  CHECK(at_point.recursive == 1);

  const MultiplicityReport report =
      mult_all(ctx, schubert_variety(ctx, idx({2, 4})), idx({1, 2}));
  CHECK(report.agree);
  CHECK(report.recursive == 2);
  CHECK(report.product == 2);
  CHECK(report.determinantal == 2);
  CHECK(report.oracle == 2);
}

TEST_CASE("multiplicity one at smooth points") {
  const GrassContext ctx(2, 4);
  const auto all = enumerate_indices(ctx);
  for (const auto& w : all)
    for (const auto& v : all) {
      if (!bruhat_leq(v, w)) continue;
      const RichardsonId x(w, v);
      for (const auto& tau : interval(ctx, x))
        if (is_smooth_at(ctx, x, tau)) CHECK(mult_recursive(ctx, x, tau) == 1);
    }
}
