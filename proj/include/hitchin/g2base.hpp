#ifndef HITCHIN_G2BASE_HPP
#define HITCHIN_G2BASE_HPP

#include <string>
#include <vector>

#include "hitchin/poly.hpp"

namespace hitchin {

// A point of the G2 Hitchin base in the (f, q) coordinates of degrees (2, 6).
// Entries may be symbolic (polynomials over shared variables).
struct G2BasePoint {
  Poly f, q;
};

G2BasePoint g2_base_point(const Poly& f, const Poly& q);

// qcheck = -q + f^3/54
Poly g2_qcheck(const G2BasePoint& p);

// l(f, q) = (f, -q + f^3/54); an involution.
G2BasePoint langlands_involution(const G2BasePoint& p);

// D = 27 q qcheck, with the short-root factor q and long-root factor 27 qcheck
// reported separately.
struct G2Discriminant {
  Poly value;         // 27 q qcheck
  Poly short_factor;  // q (product over short roots)
  Poly long_factor;   // 27 qcheck (product over long roots)
};

G2Discriminant g2_discriminant(const G2BasePoint& p);

// The two printed cameral systems for a base point (f0, q0), plus the exact
// linear change of Cartan coordinates relating them. The change lives over
// Q(sqrt 3): entries are polynomials in the adjoined symbol r3 with r3^2 = 3.
struct G2CameralSystem {
  std::vector<std::string> xy;          // {"x", "y"}
  std::vector<Poly> system_invariant;   // {I1(x,y) - f0, I2(x,y) - q0}
  std::vector<Poly> system_hitchin;     // {x^2 + y^2 - 2/3 f0, x^6 - f0 x^4 + f0^2/4 x^2 - q0}
  // coroot coordinates of the invariant system in terms of the hitchin
  // coordinates: (x_inv, y_inv) = change * (x_hit, y_hit), entries in Q[r3]
  std::vector<std::vector<Poly>> change;  // 2 x 2 over vars {"r3"}
  long bezout_degree = 0;                 // product of the equation degrees
};

// f0 and q0 are scalar values here (the systems are equations in (x, y)).
G2CameralSystem cameral_equations(const Rat& f0, const Rat& q0);

// Symbolic variant: the systems live over {"x", "y", "f0", "q0"}.
G2CameralSystem cameral_equations_symbolic();

// The G2 invariants restricted to the Cartan in the basis
// (short coroot, long coroot), matching the printed convention:
//   I1(x,y) = 2x^2 - 6xy + 6y^2
//   I2(x,y) = x^4 y^2 - 6 x^3 y^3 + 13 x^2 y^4 - 12 x y^5 + 4 y^6
// (The printed source shows 2y^2 in I1; that coefficient fails every exact
// cross-check -- see the I2 row, the discriminant identity and the
// Cauchy-Schwarz bound -- so the 6y^2 value is used throughout.)
std::vector<Poly> g2_invariants_on_t(const std::vector<std::string>& xy);

struct G2DimensionTable {
  int genus = 0;
  int delta = 0;
  long dim_base = 0;        // 14(g-1) + 8 delta
  long dim_higgs0 = 0;      // 28(g-1) + 14 delta
  long dim_b0 = 0;          // 14(g-1) + 6 delta
  long dim_leaf_space = 0;  // 2 delta
  std::vector<std::string> warnings;
};

G2DimensionTable g2_dimension_table(int genus, int delta);

}  // namespace hitchin

#endif
