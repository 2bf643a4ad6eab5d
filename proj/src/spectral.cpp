#include "hitchin/spectral.hpp"

namespace hitchin {

void MatrixFamily::validate() const {
  size_t nn = entries.size();
  if (nn == 0) throw std::invalid_argument("empty matrix family");
  for (const auto& row : entries) {
    if (row.size() != nn) throw std::invalid_argument("non-square matrix family");
    for (const auto& p : row)
      if (p.vars() != base_vars) throw std::invalid_argument("variable-set mismatch in family");
  }
  if (trace_free) {
    Poly tr(base_vars);
    for (size_t i = 0; i < nn; ++i) tr = tr + entries[i][i];
    if (!tr.is_zero()) throw domain_error("trace-free flag set but tr Phi != 0");
  }
}

SpectralEquation spectral_equation(const MatrixFamily& fam) {
  fam.validate();
  SpectralEquation eq;
  eq.vars = fam.base_vars;
  eq.vars.push_back("lambda");
  size_t n = fam.n();
  Poly lam = Poly::variable(eq.vars, "lambda");
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n, Poly(eq.vars)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      m[i][j] = -fam.entries[i][j].extended(eq.vars);
      if (i == j) m[i][j] = m[i][j] + lam;
    }
  eq.p = poly_det(m);
  size_t li = eq.vars.size() - 1;
  auto bylam = eq.p.coeffs_in(li);
  if (bylam.size() != n + 1 || !(bylam[n] - Poly::constant(eq.vars, 1)).is_zero())
    throw domain_error("spectral equation is not monic of the right degree");
  for (size_t i = 1; i <= n; ++i) {
    Poly c(fam.base_vars);
    for (const auto& [e, q] : bylam[n - i].terms()) {
      std::vector<int> r(e.begin(), e.end() - 1);
      c.add_term(std::move(r), q);
    }
    eq.coeffs.push_back(c);
  }
  if (fam.trace_free && !eq.coeffs[0].is_zero())
    throw domain_error("trace-free family with a_1 != 0");
  return eq;
}

LociReport branch_and_singular(const MatrixFamily& fam) {
  auto eq = spectral_equation(fam);
  size_t li = eq.vars.size() - 1;
  LociReport r;
  Poly disc = discriminant_univariate(eq.p, li);
  r.branch = Poly(fam.base_vars);
  for (const auto& [e, q] : disc.terms()) {
    std::vector<int> rr(e.begin(), e.end() - 1);
    r.branch.add_term(std::move(rr), q);
  }
  r.ramification = {eq.p, eq.p.derivative(li)};
  r.singular = r.ramification;
  size_t n = fam.n();
  Poly lam = Poly::variable(eq.vars, "lambda");
  for (size_t v = 0; v < fam.base_vars.size(); ++v) {
    Poly gen(eq.vars);
    for (size_t i = 1; i <= n; ++i) {
      Poly da = eq.coeffs[i - 1].derivative(v).extended(eq.vars);
      if (!da.is_zero()) gen = gen + lam.pow(static_cast<unsigned>(n - i)) * da;
    }
    r.singular.push_back(gen);
  }
  return r;
}

NumerologyReport numerology(const std::string& group, int n, int genus, int twist,
                            const long* line_degree) {
  if (n < 1 || genus < 0 || twist < 0)
    throw std::invalid_argument("numerology: need n >= 1, genus >= 0, twist >= 0");
  if (group != "GL" && group != "SL")
    throw std::invalid_argument("numerology: group must be GL or SL (G2 table lives in g2 dims)");
  NumerologyReport r;
  r.group = group;
  r.n = n;
  r.genus = genus;
  r.twist = twist;
  long g = genus;
  r.dim_base_gl = static_cast<long>(n) * n * (g - 1) + 1;
  r.dim_base_sl = r.dim_base_gl - g;
  r.spectral_genus = r.dim_base_gl;
  r.sl2_cameral_genus = 4 * g - 3;
  r.deg_det_push_o = -static_cast<long>(n) * (n - 1) * (g - 1);
  if (line_degree) {
    r.has_line_degree = true;
    r.line_degree = *line_degree;
    r.deg_push_l = *line_degree - (static_cast<long>(n) * n - n) * (g - 1);
  }
  long dim_g = (group == "GL") ? static_cast<long>(n) * n : static_cast<long>(n) * n - 1;
  r.moduli_dim = dim_g * (2 * g - 2);
  if (n == 1)
    r.warnings.push_back("n = 1 is the exceptional case (base-point freeness of |K| "
                         "depends on hyperellipticity); formulas evaluated as stated");
  if (genus < 2)
    r.warnings.push_back("formulas evaluated as stated; their derivations assume genus >= 2");
  if (twist > 0)
    r.warnings.push_back("twist echoed only; GL/SL formulas are the untwisted ones "
                         "(see the g2 dimension table for a twisted case)");
  return r;
}

long FormalDivisor::degree() const {
  long d = 0;
  for (const auto& [p, m] : mult) d += m;
  return d;
}

FormalDivisor norm_pushforward(const FormalDivisor& d) {
  FormalDivisor out;
  for (const auto& [p, m] : d.mult) {
    auto it = d.covering.find(p);
    if (it == d.covering.end())
      throw domain_error("norm_pushforward: unmapped support point " + p);
    out.mult[it->second] += m;
    if (out.mult[it->second] == 0) out.mult.erase(it->second);
  }
  // base labels map to themselves downstream
  for (const auto& [p, m] : out.mult) out.covering[p] = p;
  return out;
}

bool sl2_prym_predicate(const FormalDivisor& d,
                        const std::map<std::string, std::string>& involution) {
  auto image = [&](const std::string& p) {
    auto it = involution.find(p);
    if (it == involution.end())
      throw domain_error("prym predicate: involution undefined on " + p);
    return it->second;
  };
  for (const auto& [p, q] : involution)
    if (image(q) != p) throw domain_error("prym predicate: map is not an involution");
  // sigma* d = -d
  for (const auto& [p, m] : d.mult) {
    auto it = d.mult.find(image(p));
    long other = (it == d.mult.end()) ? 0 : it->second;
    if (other != -m) return false;
  }
  // points absent from d must also be fine: sigma of any support point was
  // checked above; nothing else carries multiplicity
  return true;
}

}  // namespace hitchin
