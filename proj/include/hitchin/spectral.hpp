#ifndef HITCHIN_SPECTRAL_HPP
#define HITCHIN_SPECTRAL_HPP

#include <map>
#include <string>
#include <vector>

#include "hitchin/poly.hpp"

namespace hitchin {

// A polynomial family of square matrices over declared base variables.
struct MatrixFamily {
  std::vector<std::string> base_vars;
  std::vector<std::vector<Poly>> entries;  // size n x n, vars = base_vars
  bool trace_free = false;

  size_t n() const { return entries.size(); }
  void validate() const;
};

// det(lambda 1 - Phi) = lambda^n + a_1 lambda^{n-1} + ... + a_n with
// a_i = (-1)^i tr Lambda^i Phi.
struct SpectralEquation {
  std::vector<std::string> vars;  // base vars + "lambda" (last)
  Poly p;                         // monic in lambda
  std::vector<Poly> coeffs;       // a_1..a_n over the base vars
};

SpectralEquation spectral_equation(const MatrixFamily& fam);

struct LociReport {
  Poly branch;                    // disc_lambda(p), over the base vars
  std::vector<Poly> ramification; // {p, dp/dlambda}, over base vars + lambda
  std::vector<Poly> singular;     // ramification plus sum lambda^{n-i} d a_i per base direction
};

LociReport branch_and_singular(const MatrixFamily& fam);

struct NumerologyReport {
  std::string group;  // "GL" or "SL"
  int n = 0, genus = 0, twist = 0;
  long dim_base_gl = 0;
  long dim_base_sl = 0;
  long spectral_genus = 0;
  long sl2_cameral_genus = 0;    // 4g-3 (reported for n = 2)
  long deg_det_push_o = 0;       // -n(n-1)(g-1)
  bool has_line_degree = false;
  long line_degree = 0;          // input d = deg L on the cover
  long deg_push_l = 0;           // d - (n^2-n)(g-1)
  long moduli_dim = 0;           // dim G (2g-2)
  std::vector<std::string> warnings;
};

NumerologyReport numerology(const std::string& group, int n, int genus, int twist = 0,
                            const long* line_degree = nullptr);

// Formal divisors on a labelled cover with a labelled base.
struct FormalDivisor {
  std::map<std::string, long> mult;                 // point label -> multiplicity
  std::map<std::string, std::string> covering;      // cover label -> base label
  long degree() const;
};

FormalDivisor norm_pushforward(const FormalDivisor& d);

// sigma* d = -d, the divisor-level Prym membership test for a double cover.
bool sl2_prym_predicate(const FormalDivisor& d,
                        const std::map<std::string, std::string>& involution);

}  // namespace hitchin

#endif
