#ifndef HITCHIN_CUBIC_HPP
#define HITCHIN_CUBIC_HPP

#include <vector>

#include "hitchin/curves.hpp"

namespace hitchin {

// SL2 cameral data over the rational base with twist divisor delta * infinity:
// L = K(D) = O(delta - 2), b in H^0(L^2) of exact degree 2 delta - 4 with
// simple rational zeros, cameral curve w^2 = b. The symplectic-leaf tangent
// space is modelled by H^0(L^2(-D)) = {polynomials of degree <= delta - 4},
// embedded in H^0(K_cameral) as xi_base * du / w (all of which is
// anti-invariant under the cover involution since the base has genus 0).
struct SL2CameralData {
  CurveModel base;
  CurveModel cameral;
  Poly b;
  std::vector<Rat> ram;  // the zeros of b
  int delta = 0;
  int leaf_dim = 0;      // delta - 3 = genus of the cameral curve

  bool in_leaf_model(const Poly& xi_base) const;
};

SL2CameralData sl2_cameral(int delta, const Poly& b);

// c(xi)(eta, zeta) = 1/2 sum over ramification points of
// Res^2_p( pullback(xi_base / b) * eta cup zeta ), with eta cup zeta the
// product quadratic differential. For SL2 the logarithmic derivative of the
// discriminant along the flow of xi restricts to xi_base / b on the base.
// Exact, rational, and symmetric in all three slots.
Rat dm_cubic_sl2(const SL2CameralData& data, const Poly& xi_base, const Poly& eta_base,
                 const Poly& zeta_base);

// The per-point integrand, exposed for diagnostics and tests.
DiffExpr dm_cubic_integrand(const SL2CameralData& data, const Poly& xi_base,
                            const Poly& eta_base, const Poly& zeta_base);

}  // namespace hitchin

#endif
