#ifndef HITCHIN_SKCHART_HPP
#define HITCHIN_SKCHART_HPP

#include <complex>
#include <string>
#include <vector>

#include "hitchin/poly.hpp"
#include "hitchin/qmatrix.hpp"

namespace hitchin {

// Holomorphic prepotential: a polynomial F in the special coordinates
// z_1..z_n with rational coefficients (complex-analytic polynomial model).
struct Prepotential {
  std::vector<std::string> zvars;
  Poly f;
};

Prepotential make_prepotential(const Poly& f);

// Derived chart data: w_i = dF/dz_i, tau = Hess F, c = third derivatives.
struct SKChart {
  Prepotential prep;
  std::vector<Poly> dual;                          // w_i
  std::vector<std::vector<Poly>> tau;              // symmetric
  std::vector<std::vector<std::vector<Poly>>> cubic;  // totally symmetric
  std::string kahler_potential;                    // 1/2 Im(sum w_k conj(z_k))
  size_t n() const { return prep.zvars.size(); }
};

SKChart from_prepotential(const Prepotential& p);

// Exact Gaussian-rational point evaluation.
struct QComplex {
  Rat re, im;
};
QComplex qc_mul(const QComplex& a, const QComplex& b);
QComplex qc_add(const QComplex& a, const QComplex& b);
QComplex eval_at(const Poly& p, const std::vector<QComplex>& z);
std::vector<QComplex> parse_complex_tuple(const std::string& s, size_t n);

struct PositivitySample {
  std::vector<QComplex> point;
  double min_eigenvalue = 0;        // of Im(tau), numeric report
  bool positive_definite = false;   // exact Sylvester classification
  std::string classification;       // "positive" or "not positive-definite"
};

std::vector<PositivitySample> positivity_sample(const SKChart& chart,
                                                const std::vector<std::vector<QComplex>>& points);

// Connection coefficients in the flat Darboux frame: nabla(d/dz_i) =
// -1/2 sum_{j,k} F_{ijk} dz_k (x) d/dy_j; the (0,1)-part vanishes. Also
// verifies, exactly and term-by-term, that -4 omega(pi^{1,0}, nabla pi^{1,0})
// reproduces the cubic tensor.
struct ConnectionData {
  std::vector<std::vector<std::vector<Poly>>> coeff;  // -1/2 F_{ijk}
  bool contraction_identity_ok = false;
};

ConnectionData connection_matrix(const SKChart& chart);

}  // namespace hitchin

#endif
