#include "hitchin/g2base.hpp"

namespace hitchin {

G2BasePoint g2_base_point(const Poly& f, const Poly& q) {
  if (f.vars() != q.vars()) throw std::invalid_argument("variable-set mismatch");
  return G2BasePoint{f, q};
}

Poly g2_qcheck(const G2BasePoint& p) { return -p.q + p.f.pow(3) * Rat(1, 54); }

G2BasePoint langlands_involution(const G2BasePoint& p) {
  return G2BasePoint{p.f, g2_qcheck(p)};
}

G2Discriminant g2_discriminant(const G2BasePoint& p) {
  G2Discriminant d;
  d.short_factor = p.q;
  d.long_factor = g2_qcheck(p) * Rat(27);
  d.value = d.short_factor * d.long_factor;
  return d;
}

std::vector<Poly> g2_invariants_on_t(const std::vector<std::string>& xy) {
  Poly x = Poly::variable(xy, xy[0]);
  Poly y = Poly::variable(xy, xy[1]);
  Poly i1 = x * x * Rat(2) - x * y * Rat(6) + y * y * Rat(6);
  Poly i2 = x.pow(4) * y.pow(2) - x.pow(3) * y.pow(3) * Rat(6) + x.pow(2) * y.pow(4) * Rat(13) -
            x * y.pow(5) * Rat(12) + y.pow(6) * Rat(4);
  return {i1, i2};
}

namespace {

G2CameralSystem cameral_equations_impl(const std::vector<std::string>& vars, const Poly& f0,
                                       const Poly& q0) {
  G2CameralSystem s;
  s.xy = vars;
  auto inv = g2_invariants_on_t(std::vector<std::string>{"x", "y"});
  Poly x = Poly::variable(vars, "x");
  Poly y = Poly::variable(vars, "y");
  Poly i1 = inv[0].compose({x, y});
  Poly i2 = inv[1].compose({x, y});
  s.system_invariant = {i1 - f0, i2 - q0};
  s.system_hitchin = {x * x + y * y - f0 * Rat(2, 3),
                      x.pow(6) - x.pow(4) * f0 + x.pow(2) * f0 * f0 * Rat(1, 4) - q0};
  // degree over the base coordinate: count only the (x, y) grading
  auto xy_degree = [&](const Poly& p) {
    int d = 0;
    for (const auto& [e, c] : p.terms()) d = std::max(d, e[0] + e[1]);
    return d;
  };
  s.bezout_degree =
      static_cast<long>(xy_degree(s.system_invariant[0])) * xy_degree(s.system_invariant[1]);
  return s;
}

}  // namespace

G2CameralSystem cameral_equations(const Rat& f0, const Rat& q0) {
  std::vector<std::string> vars = {"x", "y"};
  G2CameralSystem s = cameral_equations_impl(vars, Poly::constant(vars, f0),
                                             Poly::constant(vars, q0));

  // (x_inv, y_inv) = [[0, -r3], [1/2, -r3/2]] (x_hit, y_hit)^t; entries over
  // Q[r3] with r3^2 = 3.
  std::vector<std::string> r3v = {"r3"};
  Poly r3 = Poly::variable(r3v, "r3");
  Poly half = Poly::constant(r3v, Rat(1, 2));
  Poly zero(r3v);
  // x_inv = -r3 * y_hit ; y_inv = (x_hit - r3 * y_hit) / 2
  s.change = {{zero, -r3}, {half, -r3 * Rat(1, 2)}};

  // exact certificates
  std::vector<std::string> uvr = {"u", "v", "r3"};
  Poly u = Poly::variable(uvr, "u");
  Poly v = Poly::variable(uvr, "v");
  Poly r = Poly::variable(uvr, "r3");
  Poly three = Poly::constant(uvr, 3);
  size_t ri = 2;
  Poly xin = -r * v;
  Poly yin = (u - r * v) * Rat(1, 2);
  // evaluate I1, I2 at (xin, yin) and reduce r3^2 -> 3
  Poly i1c = g2_invariants_on_t(s.xy)[0].compose({xin, yin}).reduce_square(ri, three);
  Poly i2c = g2_invariants_on_t(s.xy)[1].compose({xin, yin}).reduce_square(ri, three);
  Poly want1 = (u * u + v * v) * Rat(3, 2);
  Poly want2 = u.pow(2) * (u.pow(2) - v.pow(2) * Rat(3)).pow(2) * Rat(1, 16);
  if (i1c != want1 || i2c != want2)
    throw domain_error("cameral change-of-coordinates certificate failed");
  return s;
}

G2CameralSystem cameral_equations_symbolic() {
  std::vector<std::string> vars = {"x", "y", "f0", "q0"};
  G2CameralSystem s = cameral_equations_impl(vars, Poly::variable(vars, "f0"),
                                             Poly::variable(vars, "q0"));
  // same connecting matrix as the scalar form
  s.change = cameral_equations(0, 0).change;
  return s;
}

G2DimensionTable g2_dimension_table(int genus, int delta) {
  if (genus < 0 || delta < 0) throw std::invalid_argument("g2 dims: need g >= 0, delta >= 0");
  G2DimensionTable t;
  t.genus = genus;
  t.delta = delta;
  long g = genus, d = delta;
  t.dim_base = 14 * (g - 1) + 8 * d;
  t.dim_higgs0 = 28 * (g - 1) + 14 * d;
  t.dim_b0 = 14 * (g - 1) + 6 * d;
  t.dim_leaf_space = 2 * d;
  if (2 * (g - 1) + d <= 0 || t.dim_base < 0)
    t.warnings.push_back("outside the very-ampleness range of K(D)^2; formulas evaluated as stated");
  return t;
}

}  // namespace hitchin
