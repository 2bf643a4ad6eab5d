#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hitchin/cubic.hpp"
#include "hitchin/periods.hpp"

using namespace hitchin;

namespace {

const std::vector<std::string> U = {"u"};
Poly P(const std::string& s) { return Poly::parse(s, U); }

// independent oracle: the residue formula collapses, for simple rational
// ramification, to 2 sum_r xi eta zeta (r) / b'(r)^2 -- computed here from
// the roots alone, with no series machinery
Rat root_sum_oracle(const Poly& b, const std::vector<Rat>& roots, const Poly& xi, const Poly& eta,
                    const Poly& zeta) {
  Poly bp = b.derivative(0);
  Rat s = 0;
  for (const auto& r : roots) {
    Rat num = xi.eval({r}) * eta.eval({r}) * zeta.eval({r});
    Rat d = bp.eval({r});
    s += num / (d * d);
  }
  return 2 * s;
}

}  // namespace

TEST_CASE("sl2 cameral data bookkeeping") {
  auto d4 = sl2_cameral(4, P("u*(u-1)*(u-2)*(u-3)"));
  CHECK(d4.cameral.genus() == 1);
  CHECK(d4.leaf_dim == 1);
  CHECK(d4.ram == std::vector<Rat>{0, 1, 2, 3});
  auto d6 = sl2_cameral(6, P("u*(u-1)*(u-2)*(u-3)*(u-4)*(u-5)*(u-6)*(u-7)"));
  CHECK(d6.cameral.genus() == 3);
  CHECK(d6.leaf_dim == 3);
  // anti-invariant differential count = cameral genus (genus-0 base)
  CHECK(d6.leaf_dim == d6.cameral.genus());
}

TEST_CASE("sl2 cameral data rejects bad input") {
  CHECK_THROWS_AS(sl2_cameral(4, P("u^2*(u-1)*(u-2)")), domain_error);   // double zero
  CHECK_THROWS_AS(sl2_cameral(4, P("u*(u-1)*(u-2)")), domain_error);     // wrong degree
  CHECK_THROWS_AS(sl2_cameral(4, P("(u^2-2)*(u-1)*(u-2)")), domain_error);  // irrational
  auto d = sl2_cameral(4, P("u*(u-1)*(u-2)*(u-3)"));
  CHECK_THROWS_AS(dm_cubic_sl2(d, P("u"), P("1"), P("1")), domain_error);  // xi off the leaf
}

TEST_CASE("delta = 4 elliptic instance: frozen exact value 10/9") {
  // b = u(u-1)(u-2)(u-3), xi = eta = zeta = 1: b'(r) in {-6, 2, -2, 6},
  // value = 2 (1/36 + 1/4 + 1/4 + 1/36) = 10/9
  auto d = sl2_cameral(4, P("u*(u-1)*(u-2)*(u-3)"));
  Rat v = dm_cubic_sl2(d, P("1"), P("1"), P("1"));
  CHECK(v == Rat(10, 9));
  CHECK(v == root_sum_oracle(d.b, d.ram, P("1"), P("1"), P("1")));
}

TEST_CASE("residue engine agrees with the root-sum oracle across instances") {
  SplitMix64 rng(7);
  std::vector<Poly> bs = {
      P("u*(u-1)*(u-2)*(u-3)"),
      P("u*(u-1)*(u-3)*(u-4)"),
      P("u*(u-2)*(u-3)*(u-5)"),
      P("(u+1)*u*(u-1)*(u-1/2)"),
  };
  for (const auto& b : bs) {
    auto d = sl2_cameral(4, b);
    for (int iter = 0; iter < 4; ++iter) {
      Poly xi = Poly::constant(U, rng.next_nonzero_rat());
      Poly eta = Poly::constant(U, rng.next_nonzero_rat());
      Poly zeta = Poly::constant(U, rng.next_nonzero_rat());
      CHECK(dm_cubic_sl2(d, xi, eta, zeta) == root_sum_oracle(b, d.ram, xi, eta, zeta));
    }
  }
}

TEST_CASE("symmetry in (eta, zeta) and full Sym3 on the delta = 6 leaf") {
  auto d = sl2_cameral(6, P("u*(u-1)*(u-2)*(u-3)*(u-4)*(u-5)*(u-6)*(u-7)"));
  std::vector<Poly> basis = {P("1"), P("u"), P("u^2")};
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j)
      for (size_t k = 0; k < 3; ++k) {
        Rat v = dm_cubic_sl2(d, basis[i], basis[j], basis[k]);
        CHECK(v == dm_cubic_sl2(d, basis[i], basis[k], basis[j]));
        CHECK(v == dm_cubic_sl2(d, basis[j], basis[i], basis[k]));
        CHECK(v == dm_cubic_sl2(d, basis[k], basis[j], basis[i]));
        CHECK(v == root_sum_oracle(d.b, d.ram, basis[i], basis[j], basis[k]));
      }
}

TEST_CASE("linearity in each slot") {
  SplitMix64 rng(17);
  auto d = sl2_cameral(6, P("u*(u-1)*(u-2)*(u-3)*(u-4)*(u-5)*(u-6)*(u-7)"));
  for (int iter = 0; iter < 6; ++iter) {
    auto rnd = [&]() {
      Poly p(U);
      for (int k = 0; k <= 2; ++k) p.add_term({k}, rng.next_rat(4, 2));
      return p;
    };
    Poly xi1 = rnd(), xi2 = rnd(), eta = rnd(), zeta = rnd();
    Rat a = rng.next_rat(3, 2), b = rng.next_rat(3, 2);
    Poly comb = xi1 * a + xi2 * b;
    Rat lhs = dm_cubic_sl2(d, comb, eta, zeta);
    Rat rhs = a * dm_cubic_sl2(d, xi1, eta, zeta) + b * dm_cubic_sl2(d, xi2, eta, zeta);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("period oracle: tau in the upper half plane, stable cycles") {
  auto b = P("u*(u-1)*(u-2)*(u-3)");
  auto r = period_oracle(b, P("1"), 1e-3);
  CHECK(r.im_tau_positive);
  CHECK(std::abs(r.tau0.real()) < 1e-9);  // rectangular lattice for this real curve
  CHECK(r.error_estimate < 1e-6);
  CHECK(std::abs(r.period_a) > 1e-12);
  // recorded values for the canonical instance (regression anchors)
  CHECK(std::abs(r.tau0 - std::complex<double>(0, 1.2792615712)) < 1e-8);
  CHECK(std::abs(r.dtau - std::complex<double>(0, 0.6141731807)) < 1e-6);
}

TEST_CASE("period oracle: degenerate direction raises at the collision step") {
  // b + t has a double root exactly at t = 1 (b((3 +- sqrt5)/2) = -1)
  auto b = P("u*(u-1)*(u-2)*(u-3)");
  CHECK_THROWS_AS(period_oracle(b, P("1"), 1.0), domain_error);
}

TEST_CASE("oracle calibration is stable across instances") {
  // kappa = exact / (dtau * a_xi^2) must be one global constant
  std::vector<Poly> bs = {
      P("u*(u-1)*(u-2)*(u-3)"),
      P("u*(u-1)*(u-3)*(u-4)"),
      P("u*(u-2)*(u-3)*(u-5)"),
  };
  std::vector<std::complex<double>> kappas;
  for (const auto& b : bs) {
    auto d = sl2_cameral(4, b);
    Rat exact = dm_cubic_sl2(d, P("1"), P("1"), P("1"));
    auto po = period_oracle(b, P("1"), 1e-4);
    auto oc = oracle_cubic(po);
    REQUIRE(std::abs(oc) > 1e-12);
    kappas.push_back(std::complex<double>(rat_to_double(exact), 0) / oc);
  }
  for (size_t i = 1; i < kappas.size(); ++i) {
    double rel = std::abs(kappas[i] - kappas[0]) / std::abs(kappas[0]);
    CHECK(rel < 1e-5);
  }
}
