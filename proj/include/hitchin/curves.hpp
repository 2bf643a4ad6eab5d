#ifndef HITCHIN_CURVES_HPP
#define HITCHIN_CURVES_HPP

#include <optional>
#include <string>
#include <vector>

#include "hitchin/laurent.hpp"
#include "hitchin/poly.hpp"
#include "hitchin/qmatrix.hpp"

namespace hitchin {

// Base curve models for the desk-scale instances: the rational curve with a
// twist divisor D = delta * infinity (L = K(D) = O(delta - 2)), and
// hyperelliptic curves w^2 = f(u) with squarefree f (untwisted, L = K).
struct CurveModel {
  enum class Kind { Rational, Hyperelliptic };
  Kind kind = Kind::Rational;
  Poly f;          // hyperelliptic defining polynomial, vars {"u"}
  int delta = 0;   // rational kind only

  static CurveModel rational(int delta);
  static CurveModel hyperelliptic(const Poly& f);

  int genus() const;
  int deg_l() const { return 2 * genus() - 2 + delta; }
  bool odd_model() const;  // hyperelliptic with deg f odd (one point at infinity)
};

// Meromorphic m-differential (num_a(u) + num_b(u) w) / (den(u) w^wexp) (du)^m
// with wexp in {0, 1} after reduction by w^2 = f.
struct DiffExpr {
  Poly num_a, num_b;  // vars {"u"}
  Poly den;
  int wexp = 0;
  int m = 0;

  bool even_in_w() const { return num_b.is_zero() && wexp == 0; }
};

DiffExpr diff_function(const Poly& num, const Poly& den);                  // m = 0
DiffExpr diff_simple(const Poly& num, const Poly& den, int wpow, int m);   // num/(den w^wpow) du^m
DiffExpr diff_mul(const CurveModel& c, const DiffExpr& a, const DiffExpr& b);
DiffExpr diff_add(const DiffExpr& a, const DiffExpr& b);  // equal m required
DiffExpr diff_scale(const DiffExpr& a, const Rat& s);

struct CurvePoint {
  enum class Kind { Finite, Branch, Infinity };
  Kind kind = Kind::Finite;
  Rat u0;     // finite / branch
  Rat w0;     // finite only: the sheet, w0^2 = f(u0), w0 != 0
  int sheet = 0;  // infinity on even models: +1 / -1

  static CurvePoint finite(const Rat& u0, const Rat& w0);
  static CurvePoint branch(const Rat& u0);
  static CurvePoint infinity(int sheet = 1);
  std::string str() const;
};

// Expansion of the m-differential in the adapted local coordinate t at p
// (t = u - u0 at finite points, t^2 = (u - u0) * unit at branch points,
// u = 1/t or 1/t^2 at infinity), including the (du/dt)^m factor.
Series local_expansion(const CurveModel& c, const DiffExpr& e, const CurvePoint& p, int ord);

// Res_p: coefficient of t^{-1} dt. Requires m = 1.
Rat residue(const CurveModel& c, const DiffExpr& e, const CurvePoint& p);

// Res^2_p at a branch point of the double cover: the coefficient of
// t^{-2} (dt)^2 in the adapted coordinate (the invariant quadratic residue at
// a pole of order <= 2). An automatic rescaling-invariance self-test (t ->
// c t) runs on every call. Requires m = 2.
Rat quadratic_residue(const CurveModel& c, const DiffExpr& e, const CurvePoint& p);

// All points over u = infinity.
std::vector<CurvePoint> points_at_infinity(const CurveModel& c);

struct SectionBasis {
  int m = 0;
  size_t dimension = 0;
  std::vector<DiffExpr> basis;
  QMatrix certificate;  // full-rank matrix of local expansion coefficients
};

// Exact basis of H^0(L^m): monomial sections for the rational model,
// u^a (du)^m / w^k (k = m, m-1) with pole-order checks at infinity for the
// hyperelliptic one. Dimension certified against Riemann-Roch.
SectionBasis section_basis(const CurveModel& c, int m);

// Rational roots of a squarefree polynomial over Q, with certificate that
// the polynomial splits completely; throws otherwise.
std::vector<Rat> rational_roots_complete(const Poly& p);

}  // namespace hitchin

#endif
