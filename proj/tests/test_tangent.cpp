#include <doctest.h>

#include "richgrass/tangent.hpp"

using namespace richgrass;

namespace {
PluckerIndex idx(std::initializer_list<int> entries) {
  return PluckerIndex(std::vector<int>(entries));
}
}  // namespace

TEST_CASE("tangent basis at fixed points") {
  const GrassContext ctx(2, 4);

  const RichardsonId point(idx({1, 3}), idx({1, 3}));
  CHECK(tangent_basis(ctx, point, idx({1, 3})).dimension() == 0);

  const RichardsonId schubert_24 = schubert_variety(ctx, idx({2, 4}));
  const TangentBasis at_bottom = tangent_basis(ctx, schubert_24, idx({1, 2}));
  CHECK(at_bottom.roots == std::vector<RootPair>{{1, 3}, {1, 4}, {2, 3}, {2, 4}});

  const RichardsonId schubert_14 = schubert_variety(ctx, idx({1, 4}));
  const TangentBasis two = tangent_basis(ctx, schubert_14, idx({1, 2}));
  CHECK(two.roots == std::vector<RootPair>{{2, 3}, {2, 4}});
  CHECK(reflect(idx({1, 2}), two.roots[0]) == idx({1, 3}));
  CHECK(reflect(idx({1, 2}), two.roots[1]) == idx({1, 4}));

  CHECK_THROWS_AS(tangent_basis(ctx, schubert_14, idx({2, 4})), std::domain_error);
}

TEST_CASE("smoothness criterion") {
  const GrassContext ctx(2, 4);
  const RichardsonId schubert_24 = schubert_variety(ctx, idx({2, 4}));

  CHECK(is_smooth_at(ctx, schubert_24, idx({2, 4})));
  CHECK_FALSE(is_smooth_at(ctx, schubert_24, idx({1, 2})));
  // Tangent dimension 4 against variety dimension 3 at the singular point.
  CHECK(tangent_basis(ctx, schubert_24, idx({1, 2})).dimension() == 4);
  CHECK(dim_richardson(schubert_24) == 3);

  const RichardsonId x(idx({2, 4}), idx({1, 3}));
  CHECK(is_smooth_at(ctx, x, idx({1, 3})));
  CHECK(tangent_basis(ctx, x, idx({1, 3})).dimension() == 2);
}

TEST_CASE("product smoothness decomposition") {
  const GrassContext ctx(2, 4);

  const RichardsonId point(idx({1, 4}), idx({1, 4}));
  const SmoothTriple at_point = smooth_product_check(ctx, point, idx({1, 4}));
  CHECK(at_point.richardson);
  CHECK(at_point.schubert);
  CHECK(at_point.opposite);

  const RichardsonId schubert_24 = schubert_variety(ctx, idx({2, 4}));
  const SmoothTriple mixed = smooth_product_check(ctx, schubert_24, idx({1, 2}));
  CHECK_FALSE(mixed.richardson);
  CHECK_FALSE(mixed.schubert);
  CHECK(mixed.opposite);

  // Conjunction law over every triple at desk scale.
  const auto all = enumerate_indices(ctx);
  for (const auto& w : all)
    for (const auto& v : all) {
      if (!bruhat_leq(v, w)) continue;
      const RichardsonId x(w, v);
      for (const auto& tau : interval(ctx, x)) {
        const SmoothTriple t = smooth_product_check(ctx, x, tau);
        CHECK(t.richardson == (t.schubert && t.opposite));
      }
    }
}

TEST_CASE("tangent dimension bounds the variety dimension") {
  for (auto [d, n] : {std::pair{2, 4}, {2, 5}}) {
    const GrassContext ctx(d, n);
    const auto all = enumerate_indices(ctx);
    for (const auto& w : all)
      for (const auto& v : all) {
        if (!bruhat_leq(v, w)) continue;
        const RichardsonId x(w, v);
        for (const auto& tau : interval(ctx, x)) {
          const int basis = tangent_basis(ctx, x, tau).dimension();
          CHECK(basis >= dim_richardson(x));
          CHECK((basis == dim_richardson(x)) == is_smooth_at(ctx, x, tau));
          // Open cells: each factor is smooth at its own extreme fixed point.
          const SmoothTriple triple = smooth_product_check(ctx, x, tau);
          if (tau == w) CHECK(triple.schubert);
          if (tau == v) CHECK(triple.opposite);
        }
      }
  }
}
