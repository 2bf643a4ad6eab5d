#ifndef HITCHIN_QUOTIENT_HPP
#define HITCHIN_QUOTIENT_HPP

#include <map>
#include <string>
#include <vector>

#include "hitchin/poly.hpp"
#include "hitchin/principal.hpp"

namespace hitchin {

// Pinned quotient coordinates (see also the A2 example of the source
// construction): with char(x) = det(lambda 1 - x) = lambda^N + sum_i a_i
// lambda^{N-i}, a_i = (-1)^i tr Lambda^i x,
//   A1:        I_1 = a_2 = det x
//   A_n, n>=2: I_j = -a_{j+1}
//   G2:        I_1 = f, I_2 = q from the 7-dim realization, i.e.
//              char = lambda (lambda^6 - f lambda^4 + f^2/4 lambda^2 - q).
struct InvariantSet {
  TypeTag type;
  std::vector<int> degrees;               // d_i = m_i + 1
  std::vector<std::string> coord_vars;    // x1..x_dim (model basis coefficients)
  std::vector<Poly> generators;           // I_j in those coordinates
  std::vector<Poly> on_cartan;            // I_j restricted to t, in coroot coords t1..tl
  std::vector<std::string> cartan_vars;
};

InvariantSet invariant_generators(const LieAlgebraModel& g);

// chi(x): exact evaluation of the pinned generators (via the realization's
// characteristic polynomial; agrees with the symbolic generators).
std::vector<Rat> adjoint_quotient(const LieAlgebraModel& g, const QVec& x);

struct KostantSection {
  const LieAlgebraModel* g = nullptr;
  PrincipalTriple triple;
  std::vector<QVec> hw_vectors;     // normalised highest-weight vectors v_i
  std::vector<Rat> scalings;        // recorded normalisation factors
  std::vector<Poly> residual;       // tails p_j(a_1..a_{j-1}): I_j(y + sum a_i v_i) = a_j + p_j
  std::vector<std::string> avars;

  // the section point for a base value b (solves the triangular system)
  QVec at(const std::vector<Rat>& b) const;
  // coefficients of k(b) as polynomials in declared base variables
  std::vector<Poly> symbolic(const std::vector<std::string>& bvars) const;
};

KostantSection kostant_section_data(const LieAlgebraModel& g);
QVec kostant_section(const LieAlgebraModel& g, const std::vector<Rat>& b);

// chi o k as polynomials in the base variables; equals the identity.
std::vector<Poly> chi_of_section_symbolic(const LieAlgebraModel& g, const KostantSection& k,
                                          const std::vector<std::string>& bvars);

struct DiscriminantPoly {
  Poly on_t;                      // product of all roots, coroot coordinates
  std::vector<std::string> tvars;
  Poly in_invariants;             // rank <= 2: exact rewriting, vars I1..Il
  std::map<std::string, Rat> constants;  // reported proportionality constants
};

DiscriminantPoly discriminant_on_t(const LieAlgebraModel& g);

}  // namespace hitchin

#endif
