#include "richgrass/tangent.hpp"

namespace richgrass {

TangentBasis tangent_basis(const GrassContext& ctx, const RichardsonId& x,
                           const PluckerIndex& tau) {
  ctx.validate(x.w());
  ctx.validate(x.v());
  ctx.validate(tau);
  require_in_interval(x, tau);

  TangentBasis basis{tau, {}};
  for (int removed : tau.entries()) {
    for (int added = 1; added <= ctx.n(); ++added) {
      if (tau.contains(added)) continue;
      const RootPair r{removed, added};
      if (in_interval(x, reflect(tau, r))) basis.roots.push_back(r);
    }
  }
  return basis;
}

bool is_smooth_at(const GrassContext& ctx, const RichardsonId& x,
                  const PluckerIndex& tau) {
  return tangent_basis(ctx, x, tau).dimension() == dim_richardson(x);
}

SmoothTriple smooth_product_check(const GrassContext& ctx, const RichardsonId& x,
                                  const PluckerIndex& tau) {
  return SmoothTriple{
      is_smooth_at(ctx, x, tau),
      is_smooth_at(ctx, schubert_variety(ctx, x.w()), tau),
      is_smooth_at(ctx, opposite_variety(ctx, x.v()), tau),
  };
}

}  // namespace richgrass
