#include "hitchin/cubic.hpp"

namespace hitchin {

namespace {
const std::vector<std::string> kU = {"u"};
}

SL2CameralData sl2_cameral(int delta, const Poly& b) {
  if (delta < 4) throw domain_error("sl2 cameral data needs delta >= 4");
  if (b.vars() != kU) throw std::invalid_argument("b must be a polynomial in u");
  int want = 2 * delta - 4;
  if (b.degree_in(0) != want)
    throw domain_error("b must have degree exactly 2*delta-4 = " + std::to_string(want) +
                       " (cover unramified over infinity)");
  SL2CameralData d;
  d.base = CurveModel::rational(delta);
  d.b = b;
  d.delta = delta;
  d.ram = rational_roots_complete(b);  // throws unless b splits over Q
  for (size_t i = 0; i + 1 < d.ram.size(); ++i)
    if (d.ram[i] == d.ram[i + 1]) throw domain_error("b must have simple zeros (disc != 0)");
  d.cameral = CurveModel::hyperelliptic(b);
  d.leaf_dim = delta - 3;
  if (d.cameral.genus() != d.leaf_dim)
    throw domain_error("cameral genus bookkeeping failed");
  return d;
}

bool SL2CameralData::in_leaf_model(const Poly& xi_base) const {
  if (xi_base.vars() != kU) return false;
  return xi_base.degree_in(0) <= delta - 4;
}

DiffExpr dm_cubic_integrand(const SL2CameralData& data, const Poly& xi_base,
                            const Poly& eta_base, const Poly& zeta_base) {
  for (const Poly* p : {&xi_base, &eta_base, &zeta_base})
    if (!data.in_leaf_model(*p))
      throw domain_error("tangent direction outside the leaf model H^0(L^2(-D))");
  // pullback(xi/b) * (eta du/w) * (zeta du/w) = xi eta zeta / b^2 (du)^2
  DiffExpr e;
  e.num_a = xi_base * eta_base * zeta_base;
  e.num_b = Poly(kU);
  e.den = data.b * data.b;
  e.wexp = 0;
  e.m = 2;
  return e;
}

Rat dm_cubic_sl2(const SL2CameralData& data, const Poly& xi_base, const Poly& eta_base,
                 const Poly& zeta_base) {
  DiffExpr q = dm_cubic_integrand(data, xi_base, eta_base, zeta_base);
  Rat sum = 0;
  for (const Rat& r : data.ram)
    sum += quadratic_residue(data.cameral, q, CurvePoint::branch(r));
  return sum / 2;
}

}  // namespace hitchin
