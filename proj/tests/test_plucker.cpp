#include <doctest.h>

#include <sstream>

#include "richgrass/plucker.hpp"

using namespace richgrass;

namespace {

PluckerIndex idx(std::initializer_list<int> entries) {
  return PluckerIndex(std::vector<int>(entries));
}

// The coordinate point e_j: unit pattern in rows j.
MatrixPoint unit_point(const GrassContext& ctx, const PluckerIndex& j) {
  MatrixPoint m(ctx.n(), ctx.d());
  for (int col = 1; col <= ctx.d(); ++col) m.at(j.entries()[col - 1], col) = 1;
  return m;
}

PatchAssignment zero_assignment(const GrassContext& ctx, const PluckerIndex& tau) {
  PatchAssignment a;
  for (int i = 1; i <= ctx.n(); ++i) {
    if (tau.contains(i)) continue;
    for (int j = 1; j <= ctx.d(); ++j) a.set(i, j, Rat(0));
  }
  return a;
}

}  // namespace

TEST_CASE("coordinates of the unit points") {
  const GrassContext ctx(2, 4);
  for (const auto& j : enumerate_indices(ctx)) {
    const MatrixPoint ej = unit_point(ctx, j);
    for (const auto& i : enumerate_indices(ctx))
      CHECK(plucker(ej, i) == (i == j ? Rat(1) : Rat(0)));
  }
}

TEST_CASE("column swap negates every coordinate") {
  const GrassContext ctx(2, 4);
  Rng rng(7);
  MatrixPoint m = random_matrix(ctx, rng);
  MatrixPoint swapped = m;
  for (int i = 1; i <= 4; ++i) std::swap(swapped.at(i, 1), swapped.at(i, 2));
  for (const auto& theta : enumerate_indices(ctx))
    CHECK(plucker(swapped, theta) == -plucker(m, theta));
}

TEST_CASE("three-term quadric identity on random matrices") {
  const GrassContext ctx(2, 4);
  Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const MatrixPoint m = random_matrix(ctx, rng);
    const Rat value = plucker(m, idx({1, 2})) * plucker(m, idx({3, 4})) -
                      plucker(m, idx({1, 3})) * plucker(m, idx({2, 4})) +
                      plucker(m, idx({1, 4})) * plucker(m, idx({2, 3}));
    CHECK(value == 0);
  }
}

TEST_CASE("patch matrix layout") {
  const GrassContext ctx(2, 4);

  // All labels zero at tau = (1,2) gives the unit point e_{(1,2)}.
  const PluckerIndex tau12 = idx({1, 2});
  const MatrixPoint e12 = patch_point(ctx, tau12, zero_assignment(ctx, tau12));
  for (const auto& theta : enumerate_indices(ctx))
    CHECK(plucker(e12, theta) == (theta == tau12 ? Rat(1) : Rat(0)));

  // At tau = (1,2) the coordinate p_{13} is the (3,2) label and p_{34} is the
  // 2x2 minor of the free rows.
  PatchAssignment a = zero_assignment(ctx, tau12);
  a.set(3, 2, Rat(5));
  CHECK(plucker(patch_point(ctx, tau12, a), idx({1, 3})) == 5);

  PatchAssignment b = zero_assignment(ctx, tau12);
  b.set(3, 1, Rat(2));
  b.set(3, 2, Rat(3));
  b.set(4, 1, Rat(5));
  b.set(4, 2, Rat(7));
  CHECK(plucker(patch_point(ctx, tau12, b), idx({3, 4})) == Rat(2 * 7 - 5 * 3));

  // At tau = (2,3) the free rows are 1 and 4; p_{12} picks up a sign.
  const PluckerIndex tau23 = idx({2, 3});
  PatchAssignment c = zero_assignment(ctx, tau23);
  c.set(1, 2, Rat(5));
  CHECK(plucker(patch_point(ctx, tau23, c), idx({1, 2})) == -5);

  // Missing labels are rejected.
  PatchAssignment incomplete;
  incomplete.set(3, 1, Rat(1));
  CHECK_THROWS_AS(patch_point(ctx, tau12, incomplete), std::invalid_argument);
}

TEST_CASE("local functions") {
  const GrassContext ctx(2, 4);

  // f_{tau,tau} is identically 1.
  Rng rng(13);
  for (const auto& tau : enumerate_indices(ctx)) {
    const PatchAssignment a = random_assignment(ctx, tau, rng);
    CHECK(local_fn(ctx, tau, tau, a) == 1);
  }

  // f_{(1,4),(2,3)} at the assignment with unit diagonal on the free rows.
  const PluckerIndex tau23 = idx({2, 3});
  PatchAssignment a = zero_assignment(ctx, tau23);
  a.set(1, 1, Rat(1));
  a.set(4, 2, Rat(1));
  CHECK(local_fn(ctx, idx({1, 4}), tau23, a) == 1);

  const PluckerIndex tau12 = idx({1, 2});
  PatchAssignment b = zero_assignment(ctx, tau12);
  b.set(3, 2, Rat(5));
  CHECK(local_fn(ctx, idx({1, 3}), tau12, b) == 5);
}

TEST_CASE("measured homogeneity degree") {
  const GrassContext ctx(2, 4);
  Rng rng(17);
  CHECK(measured_degree(ctx, idx({1, 2}), idx({1, 2}), rng) == 0);
  CHECK(measured_degree(ctx, idx({3, 4}), idx({1, 2}), rng) == 2);
  CHECK(measured_degree(ctx, idx({1, 3}), idx({1, 2}), rng) == 1);

  // Closed form d - overlap, exhaustively at (2,4).
  for (const auto& theta : enumerate_indices(ctx))
    for (const auto& tau : enumerate_indices(ctx)) {
      int overlap = 0;
      for (int e : theta.entries())
        if (tau.contains(e)) ++overlap;
      CHECK(measured_degree(ctx, theta, tau, rng) == 2 - overlap);
    }
}

TEST_CASE("matrix file parsing") {
  std::istringstream in("1 0\n0 1\n1/2 -3\n0 7/5\n");
  const MatrixPoint m = MatrixPoint::read(in, 4, 2);
  CHECK(m.at(3, 1) == Rat(1, 2));
  CHECK(m.at(3, 2) == -3);
  CHECK(m.at(4, 2) == Rat(7, 5));

  std::istringstream missing("1 0 0\n");
  CHECK_THROWS_AS(MatrixPoint::read(missing, 2, 2), std::invalid_argument);
}
