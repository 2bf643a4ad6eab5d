#ifndef HITCHIN_POLY_HPP
#define HITCHIN_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hitchin/rational.hpp"

namespace hitchin {

// Term order: graded lexicographic, leading term first (higher total degree
// first, ties broken lexicographically with the earlier variable dominating).
struct GradedLexDesc {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Multivariate polynomial with exact rational coefficients over a declared,
// ordered variable list. Canonical form: no zero coefficients stored, terms
// ordered graded-lex. Immutable value semantics; all operations are pure.
class Poly {
public:
  using TermMap = std::map<std::vector<int>, Rat, GradedLexDesc>;

  Poly() = default;  // zero polynomial in zero variables
  explicit Poly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static Poly constant(const std::vector<std::string>& vars, const Rat& c);
  static Poly variable(const std::vector<std::string>& vars, const std::string& name);
  static Poly monomial(const std::vector<std::string>& vars, std::vector<int> expo, const Rat& c);

  // Grammar: rational coefficients p/q, operators + - * ^, parentheses,
  // alphanumeric variable names; whitespace insignificant.
  static Poly parse(const std::string& text, const std::vector<std::string>& vars);

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // requires is_constant()

  int total_degree() const;  // -1 for the zero polynomial
  int degree_in(size_t vi) const;
  Rat coeff(const std::vector<int>& expo) const;
  size_t var_index(const std::string& name) const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& c) const;
  bool operator==(const Poly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly pow(unsigned int e) const;
  Poly derivative(size_t vi) const;

  // Full substitution x_i -> args[i]; all args share one variable set.
  Poly compose(const std::vector<Poly>& args) const;
  // Substitute a single variable by a polynomial over the same variable set.
  Poly subst(size_t vi, const Poly& value) const;
  // Reduce var^2 -> sq (e.g. adjoined square roots); result has degree <= 1 in vi.
  Poly reduce_square(size_t vi, const Poly& sq) const;

  Rat eval(const std::vector<Rat>& point) const;
  Poly eval_partial(size_t vi, const Rat& value) const;

  // View as univariate in vi: coefficient polynomials indexed by degree,
  // each of degree 0 in vi. Empty vector for the zero polynomial.
  std::vector<Poly> coeffs_in(size_t vi) const;
  Poly leading_coeff_in(size_t vi) const;

  // Embed into a larger variable list (must contain vars() as a subset).
  Poly extended(const std::vector<std::string>& newvars) const;

  std::string str() const;

  void add_term(std::vector<int> expo, const Rat& c);  // canonicalizing insert

private:
  void check_same_vars(const Poly& o) const;
  std::vector<std::string> vars_;
  TermMap terms_;
};

inline Poly operator*(const Rat& c, const Poly& p) { return p * c; }

// Exact division: returns a/b when b divides a in the polynomial ring.
std::optional<Poly> poly_div_exact(const Poly& a, const Poly& b);

// Resultant of p and q with respect to one variable, via fraction-free
// (Bareiss) elimination of the Sylvester matrix over the coefficient ring.
Poly resultant(const Poly& p, const Poly& q, size_t vi);

// disc(p) = (-1)^{d(d-1)/2} Res(p, p') / lc(p), d = deg p. Requires d >= 1.
Poly discriminant_univariate(const Poly& p, size_t vi);

// Determinant of a square matrix of polynomials (memoised minor expansion;
// intended for the small symbolic matrices arising from spectral covers).
Poly poly_det(const std::vector<std::vector<Poly>>& m);

}  // namespace hitchin

#endif
