#include "hitchin/skchart.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hitchin {

Prepotential make_prepotential(const Poly& f) {
  Prepotential p;
  p.zvars = f.vars();
  if (p.zvars.empty()) throw std::invalid_argument("prepotential needs at least one variable");
  p.f = f;
  return p;
}

SKChart from_prepotential(const Prepotential& p) {
  SKChart c;
  c.prep = p;
  size_t n = p.zvars.size();
  for (size_t i = 0; i < n; ++i) c.dual.push_back(p.f.derivative(i));
  c.tau.assign(n, std::vector<Poly>(n, Poly(p.zvars)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) c.tau[i][j] = c.dual[i].derivative(j);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (c.tau[i][j] != c.tau[j][i]) throw domain_error("tau is not symmetric");
  c.cubic.assign(n, std::vector<std::vector<Poly>>(n, std::vector<Poly>(n, Poly(p.zvars))));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) c.cubic[i][j][k] = c.tau[i][j].derivative(k);
  // total symmetry, exact
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        if (c.cubic[i][j][k] != c.cubic[j][i][k] || c.cubic[i][j][k] != c.cubic[i][k][j])
          throw domain_error("cubic is not totally symmetric");
      }
  std::ostringstream os;
  os << "1/2 * Im( ";
  for (size_t k = 0; k < n; ++k) {
    if (k) os << " + ";
    os << "(" << c.dual[k].str() << ") * conj(" << p.zvars[k] << ")";
  }
  os << " )";
  c.kahler_potential = os.str();
  return c;
}

QComplex qc_mul(const QComplex& a, const QComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
QComplex qc_add(const QComplex& a, const QComplex& b) { return {a.re + b.re, a.im + b.im}; }

QComplex eval_at(const Poly& p, const std::vector<QComplex>& z) {
  if (z.size() != p.vars().size()) throw std::invalid_argument("eval_at arity mismatch");
  QComplex acc{0, 0};
  for (const auto& [e, coef] : p.terms()) {
    QComplex term{coef, 0};
    for (size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) term = qc_mul(term, z[i]);
    acc = qc_add(acc, term);
  }
  return acc;
}

namespace {

// "a+bi" with rational a, b; also "i", "-i", "3i", "1/2-3/4i"
QComplex parse_complex(const std::string& s) {
  std::string t;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw std::invalid_argument("empty complex literal");
  // split at the last +/- that is not at position 0
  size_t split = std::string::npos;
  for (size_t i = 1; i < t.size(); ++i)
    if (t[i] == '+' || t[i] == '-') split = i;
  auto parse_part = [](std::string part, bool* is_imag) -> Rat {
    *is_imag = false;
    if (!part.empty() && part.back() == 'i') {
      *is_imag = true;
      part.pop_back();
      if (part.empty() || part == "+") part = "1";
      else if (part == "-") part = "-1";
    }
    if (!part.empty() && part.front() == '+') part.erase(part.begin());
    return rat_from_string(part);
  };
  QComplex out{0, 0};
  if (split == std::string::npos) {
    bool imag;
    Rat v = parse_part(t, &imag);
    (imag ? out.im : out.re) = v;
    return out;
  }
  bool imag1, imag2;
  Rat v1 = parse_part(t.substr(0, split), &imag1);
  std::string rest = t.substr(split);
  Rat v2 = parse_part(rest, &imag2);
  if (imag1 == imag2) throw std::invalid_argument("bad complex literal: " + t);
  (imag1 ? out.im : out.re) = v1;
  (imag2 ? out.im : out.re) = v2;
  return out;
}

}  // namespace

std::vector<QComplex> parse_complex_tuple(const std::string& s, size_t n) {
  std::vector<QComplex> out;
  std::string cur;
  for (char ch : s + ",") {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(parse_complex(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (out.size() != n) throw std::invalid_argument("expected " + std::to_string(n) + " coordinates");
  return out;
}

std::vector<PositivitySample> positivity_sample(const SKChart& chart,
                                                const std::vector<std::vector<QComplex>>& points) {
  size_t n = chart.n();
  std::vector<PositivitySample> out;
  for (const auto& z : points) {
    PositivitySample s;
    s.point = z;
    QMatrix im_tau(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) im_tau.at(i, j) = eval_at(chart.tau[i][j], z).im;
    // exact classification by leading principal minors
    bool pos = true;
    for (size_t k = 1; k <= n; ++k) {
      QMatrix minor(k, k);
      for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) minor.at(i, j) = im_tau.at(i, j);
      if (sgn(minor.det()) <= 0) {
        pos = false;
        break;
      }
    }
    s.positive_definite = pos;
    s.classification = pos ? "positive" : "not positive-definite";
    // numeric minimal eigenvalue (symmetric Jacobi iteration)
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) a[i][j] = rat_to_double(im_tau.at(i, j));
    for (int sweep = 0; sweep < 64; ++sweep) {
      double off = 0;
      for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
      if (off < 1e-28) break;
      for (size_t p = 0; p < n; ++p)
        for (size_t q = p + 1; q < n; ++q) {
          if (std::fabs(a[p][q]) < 1e-300) continue;
          double theta = 0.5 * std::atan2(2 * a[p][q], a[q][q] - a[p][p]);
          double cs = std::cos(theta), sn = std::sin(theta);
          for (size_t k = 0; k < n; ++k) {
            double akp = a[k][p], akq = a[k][q];
            a[k][p] = cs * akp - sn * akq;
            a[k][q] = sn * akp + cs * akq;
          }
          for (size_t k = 0; k < n; ++k) {
            double apk = a[p][k], aqk = a[q][k];
            a[p][k] = cs * apk - sn * aqk;
            a[q][k] = sn * apk + cs * aqk;
          }
        }
    }
    double mn = a[0][0];
    for (size_t i = 1; i < n; ++i) mn = std::min(mn, a[i][i]);
    s.min_eigenvalue = mn;
    out.push_back(std::move(s));
  }
  return out;
}

ConnectionData connection_matrix(const SKChart& chart) {
  size_t n = chart.n();
  ConnectionData d;
  d.coeff.assign(n, std::vector<std::vector<Poly>>(n, std::vector<Poly>(n, Poly(chart.prep.zvars))));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) d.coeff[i][j][k] = chart.cubic[i][j][k] * Rat(-1, 2);
  // c = -4 omega(pi^{1,0}, nabla pi^{1,0}) in special coordinates:
  // pi^{1,0} = sum_i dz_i (x) d/dz_i, nabla(d/dz_j) = -1/2 sum_k F_{jkl} dz_l (x) d/dy_k,
  // omega(d/dz_i, d/dy_k) = 1/2 delta_{ik}; the contraction must reproduce c exactly.
  bool ok = true;
  for (size_t i = 0; i < n && ok; ++i)
    for (size_t j = 0; j < n && ok; ++j)
      for (size_t l = 0; l < n && ok; ++l) {
        Poly acc(chart.prep.zvars);
        for (size_t k = 0; k < n; ++k) {
          if (k != i) continue;  // omega(d/dz_i, d/dy_k) = delta_{ik}/2
          acc = acc + d.coeff[j][k][l] * Rat(1, 2);
        }
        Poly rhs = acc * Rat(-4);
        if (rhs != chart.cubic[i][j][l]) ok = false;
      }
  d.contraction_identity_ok = ok;
  if (!ok) throw domain_error("connection contraction identity failed");
  return d;
}

}  // namespace hitchin
