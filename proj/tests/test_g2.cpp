#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hitchin/g2base.hpp"
#include "hitchin/liealgebra.hpp"
#include "hitchin/quotient.hpp"

using namespace hitchin;

namespace {
const std::vector<std::string> FQ = {"f", "q"};
}

TEST_CASE("langlands involution: formula, f = 0 case, symbolic l^2 = id") {
  Poly f = Poly::variable(FQ, "f"), q = Poly::variable(FQ, "q");
  auto p = g2_base_point(f, q);
  auto img = langlands_involution(p);
  CHECK(img.f == f);
  CHECK(img.q == -q + f.pow(3) * Rat(1, 54));
  auto back = langlands_involution(img);
  CHECK(back.f == p.f);
  CHECK(back.q == p.q);
  // f = 0: (0, q) -> (0, -q)
  auto z = g2_base_point(Poly(FQ), q);
  CHECK(langlands_involution(z).q == -q);
  // l is not the identity
  CHECK_FALSE(img.q == p.q);
}

TEST_CASE("fixed locus of l: q = f^3/108") {
  SplitMix64 rng(3);
  for (int iter = 0; iter < 10; ++iter) {
    Rat fv = rng.next_rat();
    Rat qv = rat_pow(fv, 3) / 108;
    auto p = g2_base_point(Poly::constant(FQ, fv), Poly::constant(FQ, qv));
    auto img = langlands_involution(p);
    CHECK(img.q == p.q);
    // and any other q moves
    Rat qq = qv + 1;
    auto p2 = g2_base_point(Poly::constant(FQ, fv), Poly::constant(FQ, qq));
    CHECK_FALSE(langlands_involution(p2).q == p2.q);
  }
}

TEST_CASE("g2 discriminant: zeros on both factors and l-invariance") {
  Poly f = Poly::variable(FQ, "f"), q = Poly::variable(FQ, "q");
  auto p = g2_base_point(f, q);
  auto d = g2_discriminant(p);
  CHECK(d.value == q * (-q + f.pow(3) * Rat(1, 54)) * Rat(27));
  // (f, 0) -> 0 through the short factor
  auto d0 = g2_discriminant(g2_base_point(f, Poly(FQ)));
  CHECK(d0.value.is_zero());
  // (f, f^3/54) -> 0 through the long factor
  auto dl = g2_discriminant(g2_base_point(f, f.pow(3) * Rat(1, 54)));
  CHECK(dl.value.is_zero());
  // invariance: D(l(p)) = D(p) symbolically (l swaps q and qcheck)
  auto dli = g2_discriminant(langlands_involution(p));
  CHECK(dli.value == d.value);
  CHECK(dli.short_factor == g2_qcheck(p));
}

TEST_CASE("degrees of (f, q) match the quotient generators (2, 6)") {
  auto inv = invariant_generators(chevalley_algebra(parse_type("G2")));
  CHECK(inv.degrees == std::vector<int>{2, 6});
  CHECK(inv.on_cartan[0].total_degree() == 2);
  CHECK(inv.on_cartan[1].total_degree() == 6);
}

TEST_CASE("Cartan-level duality map induces the base formula at 20 random points") {
  auto g = chevalley_algebra(parse_type("G2"));
  auto dual = killing_and_duality(g);
  auto inv = invariant_generators(g);
  SplitMix64 rng(seed_from_env(5));
  for (int iter = 0; iter < 20; ++iter) {
    std::vector<Rat> t = {rng.next_rat(), rng.next_rat()};
    QVec image = dual.scaled_map * QVec(t.begin(), t.end());
    std::vector<Rat> mt(image.begin(), image.end());
    // m = sqrt(3) l, so I_j(m t) = 3^{deg_j/2} I_j(l t)
    Rat f_of_lt = inv.on_cartan[0].eval(mt) / 3;
    Rat q_of_lt = inv.on_cartan[1].eval(mt) / 27;
    Rat f0 = inv.on_cartan[0].eval(t);
    Rat q0 = inv.on_cartan[1].eval(t);
    CHECK(f_of_lt == f0);
    CHECK(q_of_lt == -q0 + rat_pow(f0, 3) / 54);
  }
}

TEST_CASE("g2base invariants-on-t equal the quotient ones up to the basis relabeling") {
  auto inv = invariant_generators(chevalley_algebra(parse_type("G2")));
  std::vector<std::string> xy = {"x", "y"};
  auto printed = g2_invariants_on_t(xy);
  // (x, y) = (t2, t1): compose quotient polynomials with swapped variables
  std::vector<Poly> swap_args = {Poly::variable(xy, "y"), Poly::variable(xy, "x")};
  CHECK(inv.on_cartan[0].compose(swap_args) == printed[0]);
  CHECK(inv.on_cartan[1].compose(swap_args) == printed[1]);
}

TEST_CASE("cameral equations: both printed systems and the exact connecting change") {
  auto s = cameral_equations(Rat(2), Rat(5));
  // invariant system at (f0, q0) = (2, 5)
  CHECK(s.system_invariant[0] == Poly::parse("2*x^2 - 6*x*y + 6*y^2 - 2", s.xy));
  CHECK(s.system_hitchin[0] == Poly::parse("x^2 + y^2 - 4/3", s.xy));
  CHECK(s.system_hitchin[1] == Poly::parse("x^6 - 2*x^4 + x^2 - 5", s.xy));
  CHECK(s.bezout_degree == 12);  // = |W(G2)|
  // the construction already certifies I o T identities; spot-check shape
  CHECK(s.change.size() == 2);
  CHECK(s.change[0][1] == Poly::parse("-r3", {"r3"}));
}

TEST_CASE("hitchin-form system is the invariant one modulo the first equation") {
  // substitute v^2 -> (2/3) f0 - u^2 into
  // u^6 - f0 u^4 + f0^2/4 u^2 - (1/16) u^2 (u^2 - 3 v^2)^2 and get zero
  std::vector<std::string> uv = {"u", "v", "f0"};
  Poly u = Poly::variable(uv, "u"), v = Poly::variable(uv, "v"), f0 = Poly::variable(uv, "f0");
  Poly middle = u.pow(2) * (u.pow(2) - v.pow(2) * Rat(3)).pow(2) * Rat(1, 16);
  Poly hitchin = u.pow(6) - f0 * u.pow(4) + f0 * f0 * Rat(1, 4) * u.pow(2);
  Poly diff = hitchin - middle;
  Poly sub = f0 * Rat(2, 3) - u * u;  // v^2 -> this
  CHECK(diff.reduce_square(1, sub).is_zero());
}

TEST_CASE("cameral instantiation consistency at 10 points on the solution variety") {
  SplitMix64 rng(7);
  std::vector<std::string> uvr = {"u", "v", "r3"};
  Poly uu = Poly::variable(uvr, "u"), vv = Poly::variable(uvr, "v"), rr = Poly::variable(uvr, "r3");
  Poly x_inv = -rr * vv;
  Poly y_inv = (uu - rr * vv) * Rat(1, 2);
  std::vector<std::string> xy = {"x", "y"};
  auto inv = g2_invariants_on_t(xy);
  int checked = 0;
  for (int iter = 0; iter < 10; ++iter) {
    Rat u0 = rng.next_rat(5, 2), v0 = rng.next_rat(5, 2);
    Rat f0 = (u0 * u0 + v0 * v0) * Rat(3, 2);
    Rat q0 = rat_pow(u0, 6) - f0 * rat_pow(u0, 4) + f0 * f0 / 4 * u0 * u0;
    // (u0, v0) solves the Hitchin system for (f0, q0); its image under the
    // change solves the invariant one. Image coordinates live in Q[r3]:
    // evaluate I_j at them with r3 kept symbolic, reduce r3^2 -> 3.
    Poly three = Poly::constant(uvr, 3);
    Poly i1 = inv[0].compose({x_inv, y_inv}).reduce_square(2, three);
    Poly i2 = inv[1].compose({x_inv, y_inv}).reduce_square(2, three);
    // the reductions are r3-free, so numeric evaluation is exact
    CHECK(i1.degree_in(2) == 0);
    CHECK(i2.degree_in(2) == 0);
    CHECK(i1.eval({u0, v0, Rat(0)}) == f0);
    CHECK(i2.eval({u0, v0, Rat(0)}) == q0);
    ++checked;
  }
  CHECK(checked == 10);
}

TEST_CASE("symbolic cameral systems specialise to the scalar ones") {
  auto sym = cameral_equations_symbolic();
  auto sc = cameral_equations(Rat(2), Rat(5));
  for (int which : {0, 1}) {
    Poly spec = sym.system_invariant[which].eval_partial(2, Rat(2)).eval_partial(3, Rat(5));
    // drop the (now degree-0) f0/q0 slots
    Poly flat(sc.xy);
    for (const auto& [e, c] : spec.terms()) flat.add_term({e[0], e[1]}, c);
    CHECK(flat == sc.system_invariant[which]);
  }
  CHECK(sym.bezout_degree == 12);
}

TEST_CASE("q0 = 0 degenerates: x^2 divides the second hitchin equation") {
  auto s = cameral_equations(Rat(7), Rat(0));
  std::vector<std::string> xy = s.xy;
  Poly x2 = Poly::variable(xy, "x").pow(2);
  auto quot = poly_div_exact(s.system_hitchin[1], x2);
  REQUIRE(quot.has_value());
  CHECK(*quot == Poly::parse("x^4 - 7*x^2 + 49/4", xy));
}

TEST_CASE("dimension tables") {
  auto t = g2_dimension_table(2, 0);
  CHECK(t.dim_base == 14);
  CHECK(t.dim_higgs0 == 28);
  CHECK(t.dim_leaf_space == 0);
  auto t2 = g2_dimension_table(0, 3);
  CHECK(t2.dim_base == 10);
  CHECK(t2.dim_leaf_space == 6);
  SplitMix64 rng(11);
  for (int iter = 0; iter < 10; ++iter) {
    int g = (int)rng.next_long(0, 5), d = (int)rng.next_long(0, 5);
    auto tt = g2_dimension_table(g, d);
    CHECK(tt.dim_base - tt.dim_b0 == 2 * d);
    CHECK(tt.dim_higgs0 == 2 * tt.dim_base - 2 * d);
  }
  CHECK_THROWS_AS(g2_dimension_table(-1, 0), std::invalid_argument);
}
