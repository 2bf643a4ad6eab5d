#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "hitchin/liealgebra.hpp"
#include "hitchin/poly.hpp"
#include "hitchin/rootsystem.hpp"

using namespace hitchin;

TEST_CASE("A1 root system: rank one data") {
  auto rs = build_root_system(parse_type("A1"));
  CHECK(rs.roots.size() == 2);
  CHECK(rs.exponents == std::vector<int>{1});
  CHECK(weyl_group(rs).order() == 2);
  CHECK(rs.weyl_order_from_exponents() == 2);
}

TEST_CASE("A2 root system: six roots, exponents {1,2}") {
  auto rs = build_root_system(parse_type("A2"));
  CHECK(rs.roots.size() == 6);
  CHECK(rs.exponents == std::vector<int>{1, 2});
  CHECK(rs.highest_height == 2);
  CHECK(weyl_group(rs).order() == 6);
}

TEST_CASE("G2 root system: 12 roots, 6 short + 6 long, exponents {1,5}") {
  auto rs = build_root_system(parse_type("G2"));
  CHECK(rs.roots.size() == 12);
  int nshort = 0, nlong = 0;
  for (const auto& r : rs.roots) (r.is_long ? nlong : nshort)++;
  CHECK(nshort == 6);
  CHECK(nlong == 6);
  CHECK(rs.exponents == std::vector<int>{1, 5});
  CHECK(rs.highest_height == 5);
}

TEST_CASE("G2 Weyl group is dihedral of order 12") {
  auto rs = build_root_system(parse_type("G2"));
  auto w = weyl_group(rs);
  CHECK(w.order() == 12);
  CHECK(is_dihedral_of_order(w, 12));
}

TEST_CASE("roots closed under negation; |roots| + rank = dim g") {
  for (auto t : {"A1", "A2", "A3", "G2"}) {
    auto rs = build_root_system(parse_type(t));
    for (const auto& r : rs.roots) {
      std::vector<int> neg = r.coords;
      for (auto& x : neg) x = -x;
      bool found = false;
      for (const auto& s : rs.roots) found = found || s.coords == neg;
      CHECK(found);
    }
    auto g = chevalley_algebra(rs);
    CHECK(g.dim == rs.roots.size() + static_cast<size_t>(rs.rank));
    CHECK(rs.num_positive() == (g.dim - rs.rank) / 2);
  }
}

TEST_CASE("|W| = prod (m_i + 1) exactly") {
  CHECK(weyl_group(build_root_system(parse_type("A2"))).order() == 6);
  CHECK(weyl_group(build_root_system(parse_type("G2"))).order() == 12);
  auto rs = build_root_system(parse_type("A3"));
  CHECK(weyl_group(rs).order() == 24);
  CHECK(rs.weyl_order_from_exponents() == 24);
  auto a4 = build_root_system(parse_type("A4"));
  CHECK(weyl_group(a4).order() == 120);
  CHECK(a4.weyl_order_from_exponents() == 120);
}

TEST_CASE("Weyl generators are involutions and the closure is a group") {
  SplitMix64 rng(3);
  for (auto t : {"A2", "G2"}) {
    auto rs = build_root_system(parse_type(t));
    auto w = weyl_group(rs);
    QMatrix id = QMatrix::identity(rs.rank);
    for (const auto& s : w.generators) CHECK(s * s == id);
    auto member = [&](const QMatrix& m) {
      for (const auto& e : w.elements)
        if (e == m) return true;
      return false;
    };
    for (int iter = 0; iter < 20; ++iter) {
      const auto& a = w.elements[rng.next_long(0, (long)w.order() - 1)];
      const auto& b = w.elements[rng.next_long(0, (long)w.order() - 1)];
      CHECK(member(a * b));
      CHECK(member(*a.inverse()));
    }
  }
}

TEST_CASE("chevalley models: defining relations and grading dims") {
  auto g1 = chevalley_algebra(parse_type("A1"));
  CHECK(g1.dim == 3);
  QVec e = g1.basis_vec(1), f = g1.basis_vec(2), h = g1.basis_vec(0);
  CHECK(g1.bracket(e, f) == h);
  QVec he = g1.bracket(h, e);
  QVec e2 = e;
  for (auto& q : e2) q *= 2;
  CHECK(he == e2);

  auto g2m = chevalley_algebra(parse_type("A2"));
  CHECK(g2m.dim == 8);
  std::map<int, int> dims;
  for (int hgt : g2m.grading) dims[hgt]++;
  CHECK(dims[-2] == 1);
  CHECK(dims[-1] == 2);
  CHECK(dims[0] == 2);
  CHECK(dims[1] == 2);
  CHECK(dims[2] == 1);

  auto gg = chevalley_algebra(parse_type("G2"));
  CHECK(gg.dim == 14);
  CHECK(gg.rank() == 2);
  CHECK(gg.rep_dim == 7);
}

TEST_CASE("A_n realizations are traceless (n+1)-square matrices") {
  for (auto t : {"A1", "A2", "A3"}) {
    auto g = chevalley_algebra(parse_type(t));
    CHECK(g.rep_dim == g.rank() + 1);
    for (const auto& m : g.rep) CHECK(sgn(m.trace()) == 0);
  }
}

TEST_CASE("Jacobi identity holds exactly on all basis triples (rank <= 2)") {
  for (auto t : {"A1", "A2", "G2"}) {
    auto g = chevalley_algebra(parse_type(t));
    bool ok = true;
    for (size_t a = 0; a < g.dim && ok; ++a)
      for (size_t b = 0; b < g.dim && ok; ++b)
        for (size_t c = 0; c < g.dim && ok; ++c) {
          QVec va = g.basis_vec(a), vb = g.basis_vec(b), vc = g.basis_vec(c);
          QVec s = g.bracket(g.bracket(va, vb), vc);
          QVec t2 = g.bracket(g.bracket(vb, vc), va);
          QVec u = g.bracket(g.bracket(vc, va), vb);
          for (size_t k = 0; k < g.dim; ++k)
            if (s[k] + t2[k] + u[k] != 0) ok = false;
        }
    CHECK(ok);
  }
}

TEST_CASE("Jacobi identity sampled on A3") {
  auto g = chevalley_algebra(parse_type("A3"));
  SplitMix64 rng(9);
  for (int iter = 0; iter < 30; ++iter) {
    size_t a = rng.next_long(0, (long)g.dim - 1);
    size_t b = rng.next_long(0, (long)g.dim - 1);
    size_t c = rng.next_long(0, (long)g.dim - 1);
    QVec s = g.bracket(g.bracket(g.basis_vec(a), g.basis_vec(b)), g.basis_vec(c));
    QVec t = g.bracket(g.bracket(g.basis_vec(b), g.basis_vec(c)), g.basis_vec(a));
    QVec u = g.bracket(g.bracket(g.basis_vec(c), g.basis_vec(a)), g.basis_vec(b));
    bool ok = true;
    for (size_t k = 0; k < g.dim; ++k)
      if (s[k] + t[k] + u[k] != 0) ok = false;
    CHECK(ok);
  }
}

TEST_CASE("antisymmetry and Killing invariance on random triples") {
  SplitMix64 rng(13);
  for (auto t : {"A2", "G2"}) {
    auto g = chevalley_algebra(parse_type(t));
    for (int iter = 0; iter < 10; ++iter) {
      QVec x = g.zero(), y = g.zero(), z = g.zero();
      for (size_t k = 0; k < g.dim; ++k) {
        x[k] = rng.next_rat(3, 2);
        y[k] = rng.next_rat(3, 2);
        z[k] = rng.next_rat(3, 2);
      }
      QVec xy = g.bracket(x, y), yx = g.bracket(y, x);
      bool anti = true;
      for (size_t k = 0; k < g.dim; ++k) anti = anti && (xy[k] == -yx[k]);
      CHECK(anti);
      CHECK(g.killing_pairing(xy, z) + g.killing_pairing(y, g.bracket(x, z)) == 0);
    }
  }
}

TEST_CASE("[h_i, e_simple] follows the Cartan matrix") {
  for (auto t : {"A2", "G2"}) {
    auto g = chevalley_algebra(parse_type(t));
    for (size_t i = 0; i < g.rank(); ++i)
      for (size_t p = 0; p < g.rs.num_positive(); ++p) {
        if (g.rs.roots[p].height != 1) continue;
        size_t j = 0;
        while (g.rs.roots[p].coords[j] == 0) ++j;
        QVec lhs = g.bracket(g.basis_vec(g.h_index(i)), g.basis_vec(g.e_index(p)));
        QVec rhs = g.basis_vec(g.e_index(p));
        for (auto& q : rhs) q *= Rat(g.rs.cartan[j][i]);
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("G2 realization: Cartan characteristic polynomial shape") {
  // char(x1 h1 + x2 h2) = lambda (lambda^6 - f lambda^4 + f^2/4 lambda^2 - q)
  // with f = sum li^2, q = prod li^2 on diag(0, l1, l2, l3, -l1, -l2, -l3)
  auto g = chevalley_algebra(parse_type("G2"));
  std::vector<std::string> vars = {"x1", "x2", "lambda"};
  Poly lam = Poly::variable(vars, "lambda");
  Poly x1 = Poly::variable(vars, "x1"), x2 = Poly::variable(vars, "x2");
  QMatrix h1 = g.rep[0], h2 = g.rep[1];
  std::vector<Poly> diag;
  for (size_t i = 0; i < 7; ++i) diag.push_back(x1 * h1.at(i, i) + x2 * h2.at(i, i));
  Poly chi = Poly::constant(vars, 1);
  for (const auto& d : diag) chi = chi * (lam - d);
  Poly f = diag[1] * diag[1] + diag[2] * diag[2] + diag[3] * diag[3];
  Poly q = (diag[1] * diag[2] * diag[3]).pow(2);
  Poly want = lam * (lam.pow(6) - f * lam.pow(4) + f * f * Rat(1, 4) * lam.pow(2) - q);
  CHECK(chi == want);
  CHECK((diag[1] + diag[2] + diag[3]).is_zero());
  // the realization's Cartan really is diag(0, l1, l2, l3, -l1, -l2, -l3)
  for (size_t i = 1; i <= 3; ++i) CHECK(diag[i] == -diag[i + 3]);
  CHECK(diag[0].is_zero());
}

TEST_CASE("killing form on the Cartan: A1 positive scalar") {
  auto g = chevalley_algebra(parse_type("A1"));
  auto k = killing_on_cartan(g);
  CHECK(k.rows() == 1);
  CHECK(sgn(k.at(0, 0)) > 0);
}

TEST_CASE("G2 duality map: l^2 in W, l not in W, shorts to longs") {
  auto g = chevalley_algebra(parse_type("G2"));
  auto d = killing_and_duality(g);
  CHECK(d.l_sq_in_weyl);
  CHECK_FALSE(d.l_in_weyl);
  CHECK(d.scale_sq == 3);
  CHECK(d.scaled_map * d.scaled_map == d.weyl_square * Rat(3));
  std::vector<QVec> shorts, longs;
  for (const auto& r : g.rs.roots) {
    QVec v(r.coroot.begin(), r.coroot.end());
    (r.is_long ? shorts : longs).push_back(v);  // coroot of a long root is short
  }
  std::vector<QVec> images;
  for (const auto& s : shorts) {
    QVec im = d.scaled_map * s;
    bool in_longs = false;
    for (const auto& l : longs) in_longs = in_longs || l == im;
    CHECK(in_longs);
    for (const auto& seen : images) CHECK_FALSE(seen == im);
    images.push_back(im);
  }
  for (const auto& l : longs) {
    QVec im = d.scaled_map * l;
    QVec third = {im[0] / 3, im[1] / 3};
    bool in_shorts = false;
    for (const auto& s : shorts) in_shorts = in_shorts || s == third;
    CHECK(in_shorts);
  }
}

TEST_CASE("duality map rejected for unsupported type") {
  auto g = chevalley_algebra(parse_type("A2"));
  CHECK_THROWS_AS(killing_and_duality(g), domain_error);
}

TEST_CASE("weyl closure safety bound signals invalid input") {
  auto rs = build_root_system(parse_type("A3"));
  CHECK_THROWS_AS(weyl_group(rs, 5), domain_error);
}

TEST_CASE("invalid Cartan matrices are rejected; transpose helper") {
  CHECK_THROWS_AS(build_root_system({{2, -1}, {-4, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system({{2, 1}, {1, 2}}), std::invalid_argument);
  std::vector<std::vector<int>> bad = {{1}};
  CHECK_THROWS_AS(build_root_system(bad), std::invalid_argument);
  auto c = g2_transpose_convention({{2, -3}, {-1, 2}});
  CHECK(c == cartan_matrix(TypeTag{'G', 2}));
}
