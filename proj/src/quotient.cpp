#include "hitchin/quotient.hpp"

#include <algorithm>

namespace hitchin {

namespace {

std::vector<std::string> coord_var_names(size_t dim) {
  std::vector<std::string> v;
  for (size_t i = 1; i <= dim; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

std::vector<std::string> cartan_var_names(size_t l) {
  std::vector<std::string> v;
  for (size_t i = 1; i <= l; ++i) v.push_back("t" + std::to_string(i));
  return v;
}

// char(lambda) = det(lambda 1 - M) for a rep-matrix with polynomial entries;
// returns the coefficient list indexed by lambda-power (length rep_dim + 1).
std::vector<Poly> symbolic_char_coeffs(const LieAlgebraModel& g, const std::vector<Poly>& coeffs,
                                       const std::vector<std::string>& vars) {
  std::vector<std::string> all = vars;
  all.push_back("lambda");
  size_t n = g.rep_dim;
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n, Poly(all)));
  Poly lam = Poly::variable(all, "lambda");
  for (size_t i = 0; i < n; ++i) m[i][i] = lam;
  for (size_t k = 0; k < g.dim; ++k) {
    if (coeffs[k].is_zero()) continue;
    Poly ck = coeffs[k].extended(all);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        if (sgn(g.rep[k].at(i, j)) != 0) m[i][j] = m[i][j] - ck * g.rep[k].at(i, j);
  }
  Poly chi = poly_det(m);
  size_t li = all.size() - 1;
  auto bylam = chi.coeffs_in(li);
  std::vector<Poly> out(n + 1, Poly(vars));
  for (size_t d = 0; d < bylam.size(); ++d) {
    // drop the lambda slot (degree 0 in lambda after coeffs_in)
    Poly c(vars);
    for (const auto& [e, q] : bylam[d].terms()) {
      std::vector<int> r(e.begin(), e.end() - 1);
      c.add_term(std::move(r), q);
    }
    out[d] = c;
  }
  return out;
}

// pinned quotient coordinates from characteristic-polynomial coefficients
template <typename T>
std::vector<T> invariants_from_char(const TypeTag& type, const std::vector<T>& c,
                                    const T& zero) {
  std::vector<T> out;
  if (type.family == 'G') {
    out.push_back(zero - c[5]);  // f
    out.push_back(zero - c[1]);  // q
    return out;
  }
  size_t n = static_cast<size_t>(type.rank);
  if (n == 1) {
    out.push_back(c[0]);  // a_2 = det
    return out;
  }
  for (size_t j = 1; j <= n; ++j) out.push_back(zero - c[n + 1 - (j + 1)]);
  return out;
}

void validate_g2_char_shape(const std::vector<Poly>& c) {
  // char = lambda^7 - I1 lambda^5 + (I1^2/4) lambda^3 - I2 lambda on g2
  if (!c[6].is_zero() || !c[4].is_zero() || !c[2].is_zero() || !c[0].is_zero())
    throw domain_error("g2 invariants: characteristic polynomial has unexpected terms");
  Poly i1 = -c[5];
  if (c[3] != i1 * i1 * Rat(1, 4))
    throw domain_error("g2 invariants: middle coefficient != f^2/4");
}

}  // namespace

InvariantSet invariant_generators(const LieAlgebraModel& g) {
  InvariantSet s;
  s.type = g.rs.type;
  for (int m : g.rs.exponents) s.degrees.push_back(m + 1);
  s.coord_vars = coord_var_names(g.dim);
  s.cartan_vars = cartan_var_names(g.rank());

  std::vector<Poly> xs;
  for (size_t k = 0; k < g.dim; ++k) xs.push_back(Poly::variable(s.coord_vars, s.coord_vars[k]));
  auto chi = symbolic_char_coeffs(g, xs, s.coord_vars);
  if (g.rs.type.family == 'G') validate_g2_char_shape(chi);
  s.generators = invariants_from_char(g.rs.type, chi, Poly(s.coord_vars));

  std::vector<Poly> ts(g.dim, Poly(s.cartan_vars));
  for (size_t i = 0; i < g.rank(); ++i)
    ts[i] = Poly::variable(s.cartan_vars, s.cartan_vars[i]);
  auto chit = symbolic_char_coeffs(g, ts, s.cartan_vars);
  s.on_cartan = invariants_from_char(g.rs.type, chit, Poly(s.cartan_vars));

  for (size_t j = 0; j < s.generators.size(); ++j)
    if (s.generators[j].total_degree() != s.degrees[j])
      throw domain_error("invariant generator degree mismatch");
  return s;
}

std::vector<Rat> adjoint_quotient(const LieAlgebraModel& g, const QVec& x) {
  QVec c = g.rep_of(x).char_poly();
  return invariants_from_char(g.rs.type, c, Rat(0));
}

QVec KostantSection::at(const std::vector<Rat>& b) const {
  size_t l = g->rank();
  if (b.size() != l) throw std::invalid_argument("kostant section: wrong base dimension");
  std::vector<Rat> a(l);
  for (size_t j = 0; j < l; ++j) {
    std::vector<Rat> point(l, Rat(0));
    for (size_t i = 0; i < j; ++i) point[i] = a[i];
    a[j] = b[j] - residual[j].eval(point);
  }
  QVec out = triple.y;
  for (size_t j = 0; j < l; ++j)
    for (size_t i = 0; i < g->dim; ++i) out[i] += a[j] * hw_vectors[j][i];
  return out;
}

std::vector<Poly> KostantSection::symbolic(const std::vector<std::string>& bvars) const {
  size_t l = g->rank();
  std::vector<Poly> a(l, Poly(bvars));
  for (size_t j = 0; j < l; ++j) {
    std::vector<Poly> point;
    for (size_t i = 0; i < l; ++i)
      point.push_back(i < j ? a[i] : Poly(bvars));
    a[j] = Poly::variable(bvars, bvars[j]) - residual[j].compose(point);
  }
  std::vector<Poly> coeffs(g->dim, Poly(bvars));
  for (size_t i = 0; i < g->dim; ++i) {
    coeffs[i] = Poly::constant(bvars, triple.y[i]);
    for (size_t j = 0; j < l; ++j)
      if (sgn(hw_vectors[j][i]) != 0) coeffs[i] = coeffs[i] + a[j] * hw_vectors[j][i];
  }
  return coeffs;
}

KostantSection kostant_section_data(const LieAlgebraModel& g) {
  KostantSection k;
  k.g = &g;
  k.triple = principal_triple(unit_epinglage(g));
  auto dec = ad_decomposition(k.triple);
  k.hw_vectors = dec.highest;  // ascending exponents
  size_t l = g.rank();
  for (size_t i = 1; i <= l; ++i) k.avars.push_back("a" + std::to_string(i));

  auto section_invariants = [&]() {
    std::vector<Poly> coeffs(g.dim, Poly(k.avars));
    for (size_t i = 0; i < g.dim; ++i) {
      coeffs[i] = Poly::constant(k.avars, k.triple.y[i]);
      for (size_t j = 0; j < l; ++j)
        if (sgn(k.hw_vectors[j][i]) != 0)
          coeffs[i] = coeffs[i] + Poly::variable(k.avars, k.avars[j]) * k.hw_vectors[j][i];
    }
    auto chi = symbolic_char_coeffs(g, coeffs, k.avars);
    return invariants_from_char(g.rs.type, chi, Poly(k.avars));
  };

  // normalise v_j so the a_j-coefficient of I_j on the slice is 1
  auto inv = section_invariants();
  k.scalings.assign(l, Rat(1));
  for (size_t j = 0; j < l; ++j) {
    std::vector<int> ej(l, 0);
    ej[j] = 1;
    Rat cj = inv[j].coeff(ej);
    if (sgn(cj) == 0) throw domain_error("kostant normalisation: vanishing diagonal coefficient");
    k.scalings[j] = Rat(1) / cj;
    for (auto& x : k.hw_vectors[j]) x *= k.scalings[j];
  }
  inv = section_invariants();
  // residual tails p_j = I_j(slice) - a_j, constrained to earlier variables
  for (size_t j = 0; j < l; ++j) {
    std::vector<int> ej(l, 0);
    ej[j] = 1;
    Poly tail = inv[j] - Poly::monomial(k.avars, ej, Rat(1));
    for (const auto& [e, c] : tail.terms())
      for (size_t i = j; i < l; ++i)
        if (e[i] != 0)
          throw domain_error("kostant normalisation: tail involves a_j or later (not triangular)");
    k.residual.push_back(tail);
  }
  return k;
}

QVec kostant_section(const LieAlgebraModel& g, const std::vector<Rat>& b) {
  return kostant_section_data(g).at(b);
}

std::vector<Poly> chi_of_section_symbolic(const LieAlgebraModel& g, const KostantSection& k,
                                          const std::vector<std::string>& bvars) {
  auto coeffs = k.symbolic(bvars);
  auto chi = symbolic_char_coeffs(g, coeffs, bvars);
  return invariants_from_char(g.rs.type, chi, Poly(bvars));
}

DiscriminantPoly discriminant_on_t(const LieAlgebraModel& g) {
  DiscriminantPoly d;
  size_t l = g.rank();
  d.tvars = cartan_var_names(l);
  d.on_t = Poly::constant(d.tvars, 1);
  for (const auto& r : g.rs.roots) {
    Poly form(d.tvars);
    for (size_t j = 0; j < l; ++j) {
      Rat pap = 0;  // alpha(coroot_j) = sum_i c_i C_ij
      for (size_t i = 0; i < l; ++i) pap += Rat(r.coords[i]) * Rat(g.rs.cartan[i][j]);
      if (sgn(pap) != 0)
        form = form + Poly::variable(d.tvars, d.tvars[j]) * pap;
    }
    d.on_t = d.on_t * form;
  }

  if (l <= 2) {
    auto invs = invariant_generators(g);
    // ansatz over monomials in the invariants with matching weighted degree
    int target = d.on_t.total_degree();
    std::vector<std::vector<int>> monos;
    int d1 = invs.degrees[0];
    int d2 = l == 2 ? invs.degrees[1] : 0;
    for (int w1 = 0; w1 * d1 <= target; ++w1) {
      if (l == 1) {
        if (w1 * d1 == target) monos.push_back({w1});
        continue;
      }
      for (int w2 = 0; w1 * d1 + w2 * d2 <= target; ++w2)
        if (w1 * d1 + w2 * d2 == target) monos.push_back({w1, w2});
    }
    // solve for the coefficients by sampling, then verify exactly
    SplitMix64 rng(7);
    size_t rows = monos.size() + 4;
    QMatrix a(rows, monos.size());
    QVec rhs(rows);
    for (size_t s = 0; s < rows; ++s) {
      std::vector<Rat> t(l);
      for (auto& x : t) x = rng.next_rat(7, 3);
      rhs[s] = d.on_t.eval(t);
      std::vector<Rat> ivals;
      for (size_t j = 0; j < l; ++j) ivals.push_back(invs.on_cartan[j].eval(t));
      for (size_t mi = 0; mi < monos.size(); ++mi) {
        Rat v = 1;
        for (size_t j = 0; j < l; ++j) v *= rat_pow(ivals[j], monos[mi][j]);
        a.at(s, mi) = v;
      }
    }
    auto sol = a.solve(rhs);
    if (!sol) throw domain_error("discriminant rewriting: sampling solve failed");
    std::vector<std::string> ivars;
    for (size_t j = 1; j <= l; ++j) ivars.push_back("I" + std::to_string(j));
    d.in_invariants = Poly(ivars);
    for (size_t mi = 0; mi < monos.size(); ++mi) {
      std::vector<int> e(monos[mi].begin(), monos[mi].end());
      d.in_invariants.add_term(std::move(e), (*sol)[mi]);
    }
    // exact verification: substitute the on-Cartan invariants
    std::vector<Poly> args;
    for (size_t j = 0; j < l; ++j) args.push_back(invs.on_cartan[j]);
    if (d.in_invariants.compose(args) != d.on_t)
      throw domain_error("discriminant rewriting: exact verification failed");

    if (g.rs.type.family == 'G') {
      // D = c * q * qcheck with qcheck = -q + f^3/54
      Poly f = Poly::variable(ivars, "I1"), q = Poly::variable(ivars, "I2");
      Poly qqc = q * (-q + f.pow(3) * Rat(1, 54));
      auto ratio = poly_div_exact(d.in_invariants, qqc);
      if (!ratio || !ratio->is_constant())
        throw domain_error("G2 discriminant: not proportional to q*qcheck");
      d.constants["vs_q_qcheck"] = ratio->constant_value();
    }
    if (g.rs.type.family == 'A' && l == 1) {
      auto ratio = poly_div_exact(d.in_invariants, Poly::variable(ivars, "I1"));
      d.constants["vs_generator_q"] = ratio->constant_value();
    }
    if (g.rs.type.family == 'A') {
      // ratio against the discriminant of the characteristic polynomial on t
      auto invs_t = invs.on_cartan;
      std::vector<std::string> lt = d.tvars;
      lt.push_back("lambda");
      Poly lam = Poly::variable(lt, "lambda");
      size_t n = static_cast<size_t>(g.rs.type.rank);
      Poly char_t = lam.pow(static_cast<unsigned>(n + 1));
      if (n == 1) {
        char_t = char_t + invs_t[0].extended(lt);
      } else {
        for (size_t j = 1; j <= n; ++j)
          char_t = char_t - invs_t[j - 1].extended(lt) * lam.pow(static_cast<unsigned>(n - j));
      }
      Poly disc = discriminant_univariate(char_t, lt.size() - 1);
      Poly disc_t(d.tvars);
      for (const auto& [e, c] : disc.terms()) {
        std::vector<int> r(e.begin(), e.end() - 1);
        disc_t.add_term(std::move(r), c);
      }
      auto ratio = poly_div_exact(d.on_t, disc_t);
      if (ratio && ratio->is_constant())
        d.constants["vs_charpoly_disc"] = ratio->constant_value();
    }
  }
  return d;
}

}  // namespace hitchin
