#pragma once

// Standard monomials on Richardson varieties and their unions: enumeration,
// counting, Hilbert polynomials, and degrees. A standard monomial of degree
// m on X_w^v is a weakly decreasing Bruhat chain of m indices inside [v, w];
// its count s(w, v, m) equals dim H^0(X_w^v, L^m), so exact chain counting
// is exact cohomology counting.

#include <vector>

#include "richgrass/numeric.hpp"
#include "richgrass/poset.hpp"

namespace richgrass {

/// A weakly decreasing Bruhat chain t1 >= ... >= tm (the factor list of a
/// standard monomial).
using MultiChain = std::vector<PluckerIndex>;

/// All standard monomials of degree m on X_w^v, in lexicographic order of
/// their factor sequences. m = 0 yields the single empty chain.
std::vector<MultiChain> enumerate_standard(const GrassContext& ctx,
                                           const RichardsonId& x, int m);

/// s(w, v, m), computed by dynamic programming over the interval poset.
Int count_standard(const GrassContext& ctx, const RichardsonId& x, int m);

/// Number of chains standard on at least one member of the union.
/// Containment-redundant members are pruned first. Throws
/// std::invalid_argument on an empty list.
Int count_union(const GrassContext& ctx, const std::vector<RichardsonId>& parts,
                int m);

/// Exact polynomial agreeing with m |-> s(w, v, m); constant term first.
struct HilbertPoly {
  std::vector<Rat> coefficients;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  Rat operator()(long m) const;
};

/// Interpolates s at m = 0..dim and verifies the result predicts s at
/// dim+1..dim+3 (no higher cohomology, so the polynomial holds from m = 0).
/// A verification failure throws std::logic_error.
HilbertPoly hilbert_polynomial(const GrassContext& ctx, const RichardsonId& x);

/// Leading coefficient of the Hilbert polynomial times dim!, an integer >= 1.
Int degree_of_variety(const GrassContext& ctx, const RichardsonId& x);

/// Number of saturated chains v = a_0 < a_1 < ... < a_u = w; equals the
/// degree via the hyperplane-section recursion.
Int maximal_chain_count(const GrassContext& ctx, const RichardsonId& x);

}  // namespace richgrass
