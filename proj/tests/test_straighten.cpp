#include <doctest.h>

#include "richgrass/straighten.hpp"

using namespace richgrass;

namespace {

PluckerIndex idx(std::initializer_list<int> entries) {
  return PluckerIndex(std::vector<int>(entries));
}

Monomial mono(std::initializer_list<std::initializer_list<int>> factors) {
  std::vector<PluckerIndex> fs;
  for (auto f : factors) fs.push_back(idx(f));
  return Monomial(std::move(fs));
}

}  // namespace

TEST_CASE("standardness and first violation") {
  CHECK(mono({{1, 4}, {2, 3}}).first_violation() == 2);
  CHECK_FALSE(mono({{2, 4}, {1, 3}}).first_violation().has_value());
  CHECK(mono({{2, 4}, {1, 3}}).is_standard());
  CHECK(mono({{1, 2}, {3, 4}}).first_violation() == 2);
  CHECK(Monomial().is_standard());
  CHECK(mono({{1, 4}, {2, 3}, {1, 2}}).first_violation() == 2);
}

TEST_CASE("monomial parsing and canonical order") {
  const Monomial m = Monomial::parse("1,4;2,3");
  CHECK(m.factors() == std::vector<PluckerIndex>{idx({1, 4}), idx({2, 3})});
  CHECK(m.str() == "1,4;2,3");
  CHECK(mono({{1, 2}, {3, 4}}).canonical() == mono({{3, 4}, {1, 2}}));
}

TEST_CASE("three-term exchange relation") {
  const GrassContext ctx(2, 4);
  const Combination relation = quadratic_relation(ctx, idx({1, 4}), idx({2, 3}));

  Combination expected;
  expected.add(mono({{2, 4}, {1, 3}}), 1);
  expected.add(mono({{3, 4}, {1, 2}}), -1);
  CHECK(relation == expected);

  CHECK_THROWS_AS(quadratic_relation(ctx, idx({1, 3}), idx({2, 4})),
                  std::invalid_argument);
}

TEST_CASE("relation shape in a bigger grassmannian") {
  const GrassContext ctx(3, 6);
  const PluckerIndex a = idx({1, 2, 6});
  const PluckerIndex b = idx({3, 4, 5});
  const Combination relation = quadratic_relation(ctx, a, b);
  REQUIRE(!relation.empty());
  for (const auto& [term, coeff] : relation.terms()) {
    CHECK((coeff == 1 || coeff == -1));
    const auto& alpha = term.factors()[0];
    const auto& beta = term.factors()[1];
    CHECK(bruhat_less(a, alpha));
    CHECK(bruhat_less(b, alpha));
    CHECK(bruhat_less(beta, a));
    CHECK(bruhat_less(beta, b));
  }

  Rng rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const MatrixPoint m = random_matrix(ctx, rng);
    CHECK(evaluate(relation, m) == plucker(m, a) * plucker(m, b));
  }
}

TEST_CASE("straightening fixed points and single exchange") {
  const GrassContext ctx(2, 4);

  const Monomial standard = mono({{2, 4}, {1, 3}});
  Combination fixed;
  fixed.add(standard, 1);
  CHECK(straighten(ctx, standard) == fixed);

  Combination expected;
  expected.add(mono({{2, 4}, {1, 3}}), 1);
  expected.add(mono({{3, 4}, {1, 2}}), -1);
  CHECK(straighten(ctx, mono({{1, 4}, {2, 3}})) == expected);

  // A commutative reordering straightens without any exchange.
  Combination sorted;
  sorted.add(mono({{3, 4}, {1, 2}}), 1);
  CHECK(straighten(ctx, mono({{1, 2}, {3, 4}})) == sorted);
}

TEST_CASE("degree-3 straightening agrees with evaluation") {
  const GrassContext ctx(2, 4);
  const Monomial cubic = mono({{1, 4}, {2, 3}, {1, 4}});
  const Combination result = straighten(ctx, cubic);
  for (const auto& [term, coeff] : result.terms()) {
    CHECK(term.is_standard());
    (void)coeff;
  }
  Rng rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const MatrixPoint m = random_matrix(ctx, rng);
    CHECK(evaluate(result, m) == evaluate(cubic, m));
  }
}

TEST_CASE("restriction to a richardson variety") {
  const GrassContext ctx(2, 4);
  Combination c;
  c.add(mono({{2, 4}, {1, 3}}), 1);
  c.add(mono({{3, 4}, {1, 2}}), -1);

  // Restriction to the whole grassmannian changes nothing.
  CHECK(restrict_to(c, whole_grassmannian(ctx)) == c);

  // On X_{(2,4)}^{(1,3)} the second term dies: (3,4) is not below (2,4) and
  // (1,2) is not above (1,3).
  Combination survived;
  survived.add(mono({{2, 4}, {1, 3}}), 1);
  CHECK(restrict_to(c, RichardsonId(idx({2, 4}), idx({1, 3}))) == survived);

  // At a point only powers of p_w survive.
  const RichardsonId point(idx({2, 4}), idx({2, 4}));
  Combination powers;
  powers.add(mono({{2, 4}, {2, 4}}), 3);
  Combination mixed = powers;
  mixed.add(mono({{2, 4}, {1, 3}}), 5);
  CHECK(restrict_to(mixed, point) == powers);
}

TEST_CASE("termination measure grows along exchanges") {
  const GrassContext ctx(2, 4);
  const Int before = chain_measure(ctx, {idx({1, 4}), idx({2, 3})});
  const Int after = chain_measure(ctx, {idx({2, 4}), idx({1, 3})});
  CHECK(after > before);
  // Base is d(n-d)+1 = 5: measure of ((1,4),(2,3)) is 2*5+2.
  CHECK(before == 12);
}
