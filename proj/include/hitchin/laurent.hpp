#ifndef HITCHIN_LAURENT_HPP
#define HITCHIN_LAURENT_HPP

#include <string>
#include <vector>

#include "hitchin/poly.hpp"
#include "hitchin/rational.hpp"

namespace hitchin {

// Truncated Laurent series in one variable: sum of c_k t^k for lo <= k < ord,
// exact through order ord (i.e. the tail is O(t^ord)). Ring operations track
// and propagate the truncation order.
class Series {
public:
  Series() = default;

  static Series zero(std::string var, int ord);
  static Series x(std::string var, int ord);  // the series "t"
  static Series constant(std::string var, const Rat& c, int ord);
  static Series monomial(std::string var, int k, const Rat& c, int ord);

  const std::string& var() const { return var_; }
  int order() const { return ord_; }
  // Valuation of the nonzero part; equals order() when zero to truncation.
  int valuation() const;
  bool is_zero() const { return c_.empty(); }
  Rat coeff(int k) const;

  Series operator-() const;
  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator*(const Series& o) const;
  Series operator*(const Rat& s) const;
  Series shifted(int k) const;  // multiply by t^k

  Series inverse() const;               // needs nonzero leading coefficient
  Series operator/(const Series& o) const { return *this * o.inverse(); }
  Series pow(int e) const;              // negative exponents via inverse
  Series derivative() const;            // d/dt
  Series sqrt() const;                  // even valuation, square leading coeff
  Series compose(const Series& inner) const;  // inner valuation >= 1, *this with lo >= 0
  Series truncated(int new_ord) const;
  // Raise the claimed order, treating unrecorded coefficients as zero. Only
  // sound inside Newton-style iterations that re-certify the tail.
  Series lifted(int new_ord) const;

  std::string str() const;
  bool same_through_order(const Series& o) const;

private:
  void normalize();
  std::string var_ = "t";
  int lo_ = 0;    // exponent of c_[0]
  int ord_ = 0;   // knowledge stops here
  std::vector<Rat> c_;
};

inline Series operator*(const Rat& s, const Series& a) { return a * s; }

// Expansion of a univariate polynomial p(center + t) as a series in t.
Series series_shift(const Poly& p, size_t vi, const Rat& center, const std::string& tvar, int ord);

// Expansion of the rational function num/den around `center` (den not
// identically zero; poles allowed: the result may have negative valuation).
Series series_rational(const Poly& num, const Poly& den, size_t vi, const Rat& center,
                       const std::string& tvar, int ord);

// Square-root branch: solves t^2 = g(u) for u(t) near a simple zero `center`
// of g (g(center) = 0, g'(center) != 0). Returns u(t) = center + O(t^2).
Series solve_square_branch(const Poly& g, size_t vi, const Rat& center, const std::string& tvar,
                           int ord);

}  // namespace hitchin

#endif
