#ifndef HITCHIN_PERIODS_HPP
#define HITCHIN_PERIODS_HPP

#include <complex>
#include <vector>

#include "hitchin/poly.hpp"

namespace hitchin {

// Numerical periods of the elliptic curve w^2 = b(u) + t * direction(u) by
// adaptive Gauss-Legendre contour integration along root-avoiding circles,
// with branch continuation of w. Entirely independent of the exact residue
// machinery; serves as its oracle.
struct PeriodOracleResult {
  std::complex<double> tau0;        // tau at t = 0 (A and B cycles fixed at t = 0)
  std::complex<double> dtau;        // Richardson-extrapolated finite difference
  double error_estimate = 0;        // |D(h/2) - D(h)| of the two stencils
  std::complex<double> period_a;    // integral over A of du/w at t = 0
  std::complex<double> a_xi;        // integral over A of direction * du / (2w) at t = 0,
                                    // i.e. d/dt of the A-period of the tautological form
  bool im_tau_positive = false;
};

PeriodOracleResult period_oracle(const Poly& b, const Poly& direction, double step);

// Predicted cubic value from the oracle: (dtau/dt) * (a_xi)^2. The exact
// residue value equals calibration * this, with one global calibration
// constant shared by every instance.
std::complex<double> oracle_cubic(const PeriodOracleResult& r);

}  // namespace hitchin

#endif
