#include "hitchin/periods.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace hitchin {

namespace {

using Cplx = std::complex<double>;

std::vector<double> poly_to_doubles(const Poly& p) {
  auto cs = p.coeffs_in(0);
  std::vector<double> out;
  for (const auto& c : cs) out.push_back(c.is_zero() ? 0.0 : rat_to_double(c.constant_value()));
  if (out.empty()) out.push_back(0.0);
  return out;
}

Cplx eval_poly(const std::vector<double>& c, Cplx z) {
  Cplx v = 0;
  for (size_t i = c.size(); i-- > 0;) v = v * z + c[i];
  return v;
}

// Durand-Kerner root finder for polynomials with simple roots.
std::vector<Cplx> all_roots(std::vector<double> c) {
  while (c.size() > 1 && std::abs(c.back()) < 1e-300) c.pop_back();
  size_t d = c.size() - 1;
  if (d == 0) throw domain_error("period oracle: constant polynomial");
  std::vector<double> mon(c);
  for (auto& x : mon) x /= c.back();
  std::vector<Cplx> r(d);
  Cplx seed(0.4, 0.9);
  Cplx p = 1;
  for (size_t i = 0; i < d; ++i) {
    p *= seed;
    r[i] = p;
  }
  for (int iter = 0; iter < 500; ++iter) {
    double moved = 0;
    for (size_t i = 0; i < d; ++i) {
      Cplx num = eval_poly(mon, r[i]);
      Cplx den = 1;
      for (size_t j = 0; j < d; ++j)
        if (j != i) den *= r[i] - r[j];
      Cplx delta = num / den;
      r[i] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-14) break;
  }
  return r;
}

struct Contour {
  Cplx center;
  double radius = 0;
};

// Gauss-Legendre nodes/weights, 32 points (Golub-Welsch values).
struct GaussRule {
  std::array<double, 16> x;
  std::array<double, 16> w;
  GaussRule() {
    // positive nodes of the 32-point rule
    const double xs[16] = {
        0.0483076656877383162, 0.1444719615827964934, 0.2392873622521370745,
        0.3318686022821276498, 0.4213512761306353454, 0.5068999089322293900,
        0.5877157572407623290, 0.6630442669302152010, 0.7321821187402896804,
        0.7944837959679424069, 0.8493676137325699701, 0.8963211557660521240,
        0.9349060759377396892, 0.9647622555875064308, 0.9856115115452683354,
        0.9972638618494815635};
    const double ws[16] = {
        0.0965400885147278006, 0.0956387200792748594, 0.0938443990808045654,
        0.0911738786957638847, 0.0876520930044038111, 0.0833119242269467552,
        0.0781938957870703065, 0.0723457941088485062, 0.0658222227763618468,
        0.0586840934785355471, 0.0509980592623761762, 0.0428358980222266807,
        0.0342738629130214331, 0.0253920653092620595, 0.0162743947309056706,
        0.0070186100094700966};
    for (int i = 0; i < 16; ++i) {
      x[i] = xs[i];
      w[i] = ws[i];
    }
  }
};

const GaussRule kGauss;

// integrand(theta) for theta in [0, 2 pi); continuous branch of w maintained
// by the caller through successive evaluations.
class BranchTracker {
public:
  explicit BranchTracker(const std::vector<double>& poly) : poly_(poly) {}
  Cplx w_at(Cplx u) {
    Cplx v = std::sqrt(eval_poly(poly_, u));
    if (have_prev_) {
      if (std::abs(v + prev_) < std::abs(v - prev_)) v = -v;
    } else {
      // canonical seed branch: right half plane, ties broken upward. The
      // principal sqrt alone is unstable against signed zeros on its cut.
      double scale = std::abs(v);
      if (v.real() < -1e-12 * scale ||
          (std::abs(v.real()) <= 1e-12 * scale && v.imag() < 0))
        v = -v;
    }
    prev_ = v;
    have_prev_ = true;
    return v;
  }

private:
  std::vector<double> poly_;
  Cplx prev_;
  bool have_prev_ = false;
};

// integral over the circle of numer(u)/w(u) du, branch-continued
Cplx contour_integral(const std::vector<double>& under_sqrt, const std::vector<double>& numer,
                      const Contour& k) {
  auto integrate_panels = [&](size_t panels) {
    BranchTracker bt(under_sqrt);
    // seed the branch at theta = 0 and walk around once to prime continuity
    Cplx acc = 0;
    const double twopi = 2 * M_PI;
    double prev_theta = 0;
    bt.w_at(k.center + k.radius);
    for (size_t p = 0; p < panels; ++p) {
      double a = twopi * static_cast<double>(p) / panels;
      double b = twopi * static_cast<double>(p + 1) / panels;
      double mid = (a + b) / 2, half = (b - a) / 2;
      // evaluate nodes in increasing theta to keep the branch continuous
      std::array<double, 32> th;
      for (int i = 0; i < 16; ++i) {
        th[i] = mid - half * kGauss.x[15 - i];
        th[16 + i] = mid + half * kGauss.x[i];
      }
      for (int i = 0; i < 32; ++i) {
        double theta = th[i];
        Cplx u = k.center + k.radius * std::exp(Cplx(0, theta));
        Cplx du = k.radius * Cplx(0, 1) * std::exp(Cplx(0, theta));
        Cplx w = bt.w_at(u);
        double weight = (i < 16) ? kGauss.w[15 - i] : kGauss.w[i - 16];
        acc += weight * half * eval_poly(numer, u) / w * du;
      }
      prev_theta = b;
    }
    (void)prev_theta;
    return acc;
  };
  Cplx prev = integrate_panels(8);
  for (size_t panels = 16; panels <= 4096; panels *= 2) {
    Cplx cur = integrate_panels(panels);
    if (std::abs(cur - prev) <= 1e-13 * std::max(1.0, std::abs(cur))) return cur;
    prev = cur;
  }
  throw domain_error("period oracle: contour integration failed to converge");
}

struct CurveFrame {
  std::vector<Cplx> roots;  // sorted by real part
  Contour ca, cb;
};

CurveFrame frame_for(const std::vector<double>& poly) {
  CurveFrame f;
  f.roots = all_roots(poly);
  std::sort(f.roots.begin(), f.roots.end(),
            [](Cplx a, Cplx b) { return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag(); });
  double scale = 0;
  for (const auto& r : f.roots) scale = std::max(scale, std::abs(r));
  double mindist = 1e300;
  for (size_t i = 0; i < f.roots.size(); ++i)
    for (size_t j = i + 1; j < f.roots.size(); ++j)
      mindist = std::min(mindist, std::abs(f.roots[i] - f.roots[j]));
  if (mindist < 1e-9 * std::max(1.0, scale))
    throw domain_error("period oracle: root collision along the path");
  auto around = [&](size_t i, size_t j) {
    Contour k;
    k.center = (f.roots[i] + f.roots[j]) / 2.0;
    double pair_r = std::abs(f.roots[i] - f.roots[j]) / 2.0;
    double clearance = 1e300;
    for (size_t m = 0; m < f.roots.size(); ++m) {
      if (m == i || m == j) continue;
      clearance = std::min(clearance, std::abs(f.roots[m] - k.center) - pair_r);
    }
    if (clearance <= 0) throw domain_error("period oracle: contour separation failed");
    k.radius = pair_r + 0.45 * clearance;
    return k;
  };
  f.ca = around(0, 1);
  f.cb = around(1, 2);
  return f;
}

}  // namespace

PeriodOracleResult period_oracle(const Poly& b, const Poly& direction, double step) {
  if (b.vars() != direction.vars() || b.vars() != std::vector<std::string>{"u"})
    throw std::invalid_argument("period oracle expects polynomials in u");
  if (b.degree_in(0) != 4)
    throw domain_error("period oracle: elliptic instance needs deg b = 4");
  if (!(step > 0)) throw std::invalid_argument("period oracle: bad step");
  auto bd = poly_to_doubles(b);
  auto xd = poly_to_doubles(direction);
  auto poly_at = [&](double t) {
    std::vector<double> c = bd;
    if (c.size() < xd.size()) c.resize(xd.size(), 0.0);
    for (size_t i = 0; i < xd.size(); ++i) c[i] += t * xd[i];
    return c;
  };
  const std::vector<double> one = {1.0};

  // cycles fixed by the root configuration at t = 0
  auto tau_at = [&](double t, double* flip, CurveFrame* frame0) {
    auto poly = poly_at(t);
    CurveFrame f = frame_for(poly);
    Cplx pa = contour_integral(poly, one, f.ca);
    Cplx pb = contour_integral(poly, one, f.cb);
    Cplx tau = pb / pa;
    if (flip && *flip == 0) *flip = (tau.imag() >= 0) ? 1.0 : -1.0;
    if (flip) tau *= *flip;
    if (frame0) *frame0 = f;
    return std::make_pair(tau, pa);
  };

  double flip = 0;
  CurveFrame f0;
  auto [tau0, pa0] = tau_at(0.0, &flip, &f0);

  PeriodOracleResult out;
  out.tau0 = tau0;
  out.period_a = pa0;
  out.im_tau_positive = tau0.imag() > 0;

  // A-period of the derivative of the tautological form: d/dt (w du) = xi du/(2w)
  {
    auto poly = poly_at(0.0);
    std::vector<double> halfxi = xd;
    for (auto& c : halfxi) c /= 2;
    out.a_xi = contour_integral(poly, halfxi, f0.ca);
  }

  auto d_of = [&](double h) {
    auto tp = tau_at(h, &flip, nullptr).first;
    auto tm = tau_at(-h, &flip, nullptr).first;
#ifdef HITCHIN_PERIOD_DEBUG
    std::fprintf(stderr, "h=%g tau(+h)=%.12f%+.12fi tau(-h)=%.12f%+.12fi\n", h, tp.real(),
                 tp.imag(), tm.real(), tm.imag());
#endif
    return (tp - tm) / (2 * h);
  };
  Cplx d1 = d_of(step);
  Cplx d2 = d_of(step / 2);
  out.dtau = (4.0 * d2 - d1) / 3.0;
  out.error_estimate = std::abs(d2 - d1);
  return out;
}

std::complex<double> oracle_cubic(const PeriodOracleResult& r) {
  return r.dtau * r.a_xi * r.a_xi;
}

}  // namespace hitchin
