#pragma once

// Tangent space of X_w^v at a T-fixed point e_tau, and the two smoothness
// criteria. A tangent vector corresponds to an entry exchange on tau whose
// result stays inside [v, w]; the point is smooth exactly when the number of
// such exchanges equals the dimension.

#include <vector>

#include "richgrass/poset.hpp"

namespace richgrass {

/// The canonical tangent basis at e_tau: one root pair per basis vector,
/// ordered by (removed, added).
struct TangentBasis {
  PluckerIndex tau;
  std::vector<RootPair> roots;

  int dimension() const { return static_cast<int>(roots.size()); }
};

/// All exchanges (a in tau, b not in tau) with v <= reflect(tau, (a,b)) <= w.
/// Throws std::domain_error when tau lies outside [v, w].
TangentBasis tangent_basis(const GrassContext& ctx, const RichardsonId& x,
                           const PluckerIndex& tau);

/// Tangent dimension equals variety dimension.
bool is_smooth_at(const GrassContext& ctx, const RichardsonId& x,
                  const PluckerIndex& tau);

struct SmoothTriple {
  bool richardson;  // X_w^v at e_tau
  bool schubert;    // X_w at e_tau
  bool opposite;    // X^v at e_tau
};

/// Smoothness of X_w^v, X_w, and X^v at e_tau; the first equals the
/// conjunction of the other two.
SmoothTriple smooth_product_check(const GrassContext& ctx, const RichardsonId& x,
                                  const PluckerIndex& tau);

}  // namespace richgrass
