#pragma once

// Multiplicity of X_w^v at a T-fixed point e_tau, by four independent
// algorithms that must agree exactly:
//   1. the cover-boundary recursion,
//   2. the Schubert x opposite-Schubert product formula,
//   3. the generalized Rosenthal-Zelevinsky binomial determinant,
//   4. a tangent-cone Hilbert-function oracle (graded chain counting).

#include <vector>

#include "richgrass/numeric.hpp"
#include "richgrass/poset.hpp"

namespace richgrass {

/// Homogeneity degree of p_theta/p_tau on the patch at e_tau:
/// d - |entries(theta) cap entries(tau)|.
int deg_tau(const PluckerIndex& tau, const PluckerIndex& theta);

/// Counts weakly decreasing chains of indices comparable to tau inside
/// [v, w] (tau itself excluded), graded by total deg_tau. The grade-r count
/// is the dimension of the r-th graded piece of the tangent cone at e_tau.
class GradedChainCounter {
 public:
  GradedChainCounter(const GrassContext& ctx, const RichardsonId& x,
                     const PluckerIndex& tau);

  Int count(int grade) const;

 private:
  Int chains_topped_by(size_t element, int grade) const;

  std::vector<PluckerIndex> elements_;
  std::vector<int> grades_;
  std::vector<std::vector<bool>> strictly_below_;
  mutable std::vector<std::vector<Int>> memo_;       // [element][grade], -1 = unset
  mutable std::vector<Int> totals_;                  // [grade], -1 = unset
};

/// Grade-r dimension of the tangent cone at e_tau.
Int tangent_cone_hilbert(const GrassContext& ctx, const RichardsonId& x,
                         const PluckerIndex& tau, int grade);

/// Boundary recursion: descend through the plus boundary while w > tau, then
/// the minus boundary while tau > v; each step divides exactly by the grade
/// of the peeled coordinate. Inexact division throws std::logic_error.
Int mult_recursive(const GrassContext& ctx, const RichardsonId& x,
                   const PluckerIndex& tau);

/// Rosenthal-Zelevinsky determinant for the Schubert variety X_w at e_tau.
Int mult_schubert_det(const GrassContext& ctx, const PluckerIndex& w,
                      const PluckerIndex& tau);

/// Multiplicity of the opposite Schubert variety X^v at e_tau, via the
/// complement-reflection map.
Int mult_opposite(const GrassContext& ctx, const PluckerIndex& v,
                  const PluckerIndex& tau);

/// mult(X_w at e_tau) * mult(X^v at e_tau).
Int mult_product(const GrassContext& ctx, const RichardsonId& x,
                 const PluckerIndex& tau);

/// Signed determinant of the product of the two binomial matrices.
Int mult_richardson_det(const GrassContext& ctx, const RichardsonId& x,
                        const PluckerIndex& tau);

/// Degree of the projectivized tangent cone: fits the Hilbert polynomial of
/// the graded chain counts over a stability window and returns
/// (leading coefficient) * (dim-1)!. Window instability or a non-integral
/// result throws std::logic_error.
Int mult_oracle(const GrassContext& ctx, const RichardsonId& x,
                const PluckerIndex& tau);

struct MultiplicityReport {
  Int recursive;
  Int product;
  Int determinantal;
  Int oracle;
  bool agree = false;
};

/// Runs all four methods and cross-checks the combined boundary identity
/// when w > tau > v.
MultiplicityReport mult_all(const GrassContext& ctx, const RichardsonId& x,
                            const PluckerIndex& tau);

}  // namespace richgrass
