#include "hitchin/curves.hpp"

#include <algorithm>
#include <sstream>

namespace hitchin {

namespace {

const std::vector<std::string> kU = {"u"};

void check_u_poly(const Poly& p) {
  if (p.vars() != kU) throw std::invalid_argument("expected a polynomial in the variable u");
}

// p(1/t) = t^{-deg p} * reversed(p)(t)
Poly reversed(const Poly& p) {
  int d = p.degree_in(0);
  Poly r(kU);
  for (const auto& [e, c] : p.terms()) r.add_term({d - e[0]}, c);
  return r;
}

}  // namespace

CurveModel CurveModel::rational(int delta) {
  if (delta < 2) throw domain_error("rational model needs twist degree >= 2 (deg L >= 0)");
  CurveModel c;
  c.kind = Kind::Rational;
  c.delta = delta;
  c.f = Poly(kU);
  return c;
}

CurveModel CurveModel::hyperelliptic(const Poly& f) {
  check_u_poly(f);
  if (f.degree_in(0) < 3) throw domain_error("hyperelliptic model needs deg f >= 3");
  if (discriminant_univariate(f, 0).is_zero())
    throw domain_error("hyperelliptic model needs squarefree f (disc != 0)");
  CurveModel c;
  c.kind = Kind::Hyperelliptic;
  c.f = f;
  c.delta = 0;
  return c;
}

int CurveModel::genus() const {
  if (kind == Kind::Rational) return 0;
  return (f.degree_in(0) - 1) / 2;
}

bool CurveModel::odd_model() const {
  return kind == Kind::Hyperelliptic && f.degree_in(0) % 2 == 1;
}

DiffExpr diff_function(const Poly& num, const Poly& den) { return diff_simple(num, den, 0, 0); }

DiffExpr diff_simple(const Poly& num, const Poly& den, int wpow, int m) {
  check_u_poly(num);
  check_u_poly(den);
  if (den.is_zero()) throw domain_error("zero denominator");
  DiffExpr e;
  e.num_a = num;
  e.num_b = Poly(kU);
  e.den = den;
  e.wexp = wpow;
  e.m = m;
  return e;
}

namespace {

// canonicalise wexp into {0,1} using w^2 = f
DiffExpr reduce(const CurveModel& c, DiffExpr e) {
  if (e.wexp < 0) {  // w^{+k} in the numerator
    int k = -e.wexp;
    Poly fpow = c.kind == CurveModel::Kind::Hyperelliptic ? c.f : Poly::constant(kU, 1);
    Poly a = e.num_a, b = e.num_b;
    // multiply numerator by w^k
    for (int i = 0; i < k; ++i) {
      Poly na = b * fpow;
      Poly nb = a;
      a = na;
      b = nb;
    }
    e.num_a = a;
    e.num_b = b;
    e.wexp = 0;
  }
  if (e.wexp >= 2) {
    int k = e.wexp / 2;
    e.wexp %= 2;
    e.den = e.den * c.f.pow(static_cast<unsigned>(k));
  }
  return e;
}

}  // namespace

DiffExpr diff_mul(const CurveModel& c, const DiffExpr& a, const DiffExpr& b) {
  DiffExpr e;
  e.num_a = a.num_a * b.num_a;
  e.num_b = a.num_a * b.num_b + a.num_b * b.num_a;
  if (!a.num_b.is_zero() && !b.num_b.is_zero()) {
    if (c.kind != CurveModel::Kind::Hyperelliptic)
      throw domain_error("w-terms on a rational model");
    e.num_a = e.num_a + a.num_b * b.num_b * c.f;
  }
  e.den = a.den * b.den;
  e.wexp = a.wexp + b.wexp;
  e.m = a.m + b.m;
  return reduce(c, e);
}

DiffExpr diff_add(const DiffExpr& a, const DiffExpr& b) {
  if (a.m != b.m) throw domain_error("adding differentials of different degree");
  if (a.wexp != b.wexp)
    throw domain_error("adding differentials with different w-denominators (bring to "
                       "a common form first)");
  DiffExpr e;
  e.num_a = a.num_a * b.den + b.num_a * a.den;
  e.num_b = a.num_b * b.den + b.num_b * a.den;
  e.den = a.den * b.den;
  e.wexp = a.wexp;
  e.m = a.m;
  return e;
}

DiffExpr diff_scale(const DiffExpr& a, const Rat& s) {
  DiffExpr e = a;
  e.num_a = e.num_a * s;
  e.num_b = e.num_b * s;
  return e;
}

CurvePoint CurvePoint::finite(const Rat& u0, const Rat& w0) {
  CurvePoint p;
  p.kind = Kind::Finite;
  p.u0 = u0;
  p.w0 = w0;
  return p;
}
CurvePoint CurvePoint::branch(const Rat& u0) {
  CurvePoint p;
  p.kind = Kind::Branch;
  p.u0 = u0;
  return p;
}
CurvePoint CurvePoint::infinity(int sheet) {
  CurvePoint p;
  p.kind = Kind::Infinity;
  p.sheet = sheet;
  return p;
}

std::string CurvePoint::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Finite: os << "(u=" << rat_to_string(u0) << ", w=" << rat_to_string(w0) << ")"; break;
    case Kind::Branch: os << "(u=" << rat_to_string(u0) << ", w=0)"; break;
    case Kind::Infinity: os << "(infinity, sheet " << sheet << ")"; break;
  }
  return os.str();
}

std::vector<CurvePoint> points_at_infinity(const CurveModel& c) {
  if (c.kind == CurveModel::Kind::Rational || c.odd_model())
    return {CurvePoint::infinity(1)};
  return {CurvePoint::infinity(1), CurvePoint::infinity(-1)};
}

namespace {

struct LocalData {
  Series u;       // u(t)
  Series du;      // du/dt
  std::optional<Series> w;  // w(t), built on demand
};

Series poly_series_at(const Poly& p, const Series& user, int ord) {
  // evaluate p at a series argument (Horner on the coefficient list)
  auto cs = p.coeffs_in(0);
  Series acc = Series::zero(user.var(), ord);
  for (size_t i = cs.size(); i-- > 0;) {
    acc = acc * user;
    if (!cs[i].is_zero()) acc = acc + Series::constant(user.var(), cs[i].constant_value(), ord);
  }
  return acc.truncated(ord);
}

LocalData local_frame(const CurveModel& c, const CurvePoint& p, int ord, bool need_w,
                      const Rat& scale = Rat(1)) {
  const std::string tv = "t";
  LocalData ld;
  switch (p.kind) {
    case CurvePoint::Kind::Finite: {
      ld.u = Series::x(tv, ord) * scale + Series::constant(tv, p.u0, ord);
      ld.du = Series::constant(tv, scale, ord);
      if (need_w) {
        if (c.kind != CurveModel::Kind::Hyperelliptic)
          throw domain_error("w-expansion requested on a rational model");
        Rat f0 = c.f.eval({p.u0});
        if (f0 != p.w0 * p.w0) throw domain_error("point does not lie on the curve");
        if (sgn(p.w0) == 0) throw domain_error("finite point must have w != 0 (use branch)");
        Series fs = poly_series_at(c.f, ld.u, ord);
        Series w = fs.sqrt();
        if (rat_sqrt(f0) != p.w0) w = -w;  // sqrt() picks the positive branch
        ld.w = w;
      }
      break;
    }
    case CurvePoint::Kind::Branch: {
      if (c.kind != CurveModel::Kind::Hyperelliptic)
        throw domain_error("branch point on a rational model");
      if (sgn(c.f.eval({p.u0})) != 0) throw domain_error("not a branch point of w^2 = f");
      // u = u0 + (scale t)^2
      Series t2 = Series::monomial(tv, 2, scale * scale, ord);
      ld.u = t2 + Series::constant(tv, p.u0, ord);
      ld.du = Series::monomial(tv, 1, scale * scale * 2, ord);
      if (need_w) {
        Series fs = poly_series_at(c.f, ld.u, ord + 2);
        ld.w = fs.sqrt();  // valuation 1; requires square leading coefficient
      }
      break;
    }
    case CurvePoint::Kind::Infinity: {
      if (c.kind == CurveModel::Kind::Rational || !c.odd_model()) {
        // u = 1/t
        ld.u = Series::monomial(tv, -1, 1, ord);
        ld.du = Series::monomial(tv, -2, -1, ord);
        if (need_w) {
          if (c.kind != CurveModel::Kind::Hyperelliptic)
            throw domain_error("w-expansion requested on a rational model");
          Series fs = poly_series_at(c.f, ld.u, ord + c.f.degree_in(0) + 2);
          Series w = fs.sqrt();
          if (p.sheet < 0) w = -w;
          ld.w = w;
        }
      } else {
        // odd model: u = 1/t^2 at the single ramified point over infinity
        ld.u = Series::monomial(tv, -2, 1, ord);
        ld.du = Series::monomial(tv, -3, -2, ord);
        if (need_w) {
          Series fs = poly_series_at(c.f, ld.u, ord + 2 * c.f.degree_in(0) + 2);
          ld.w = fs.sqrt();
        }
      }
      break;
    }
  }
  return ld;
}

Series expansion_with_scale(const CurveModel& c, const DiffExpr& e0, const CurvePoint& p, int ord,
                            const Rat& scale) {
  DiffExpr e = reduce(c, e0);  // wexp in {0,1}
  bool need_w = !e.even_in_w();
  // generous working order: poles from den, w-powers and du-factors
  int pad = 2 * (e.den.degree_in(0) + 3) + 3 * std::max(0, e.m) + 6;
  int work = ord + pad;
  LocalData ld = local_frame(c, p, work, need_w, scale);
  Series num = poly_series_at(e.num_a, ld.u, work);
  if (!e.num_b.is_zero()) num = num + poly_series_at(e.num_b, ld.u, work) * (*ld.w);
  Series den = poly_series_at(e.den, ld.u, work);
  if (e.wexp == 1) den = den * (*ld.w);
  Series val = num / den;
  for (int i = 0; i < e.m; ++i) val = val * ld.du;
  return val.truncated(ord);
}

}  // namespace

Series local_expansion(const CurveModel& c, const DiffExpr& e, const CurvePoint& p, int ord) {
  return expansion_with_scale(c, e, p, ord, Rat(1));
}

Rat residue(const CurveModel& c, const DiffExpr& e, const CurvePoint& p) {
  if (e.m != 1) throw domain_error("residue: expected a 1-differential");
  Series s = local_expansion(c, e, p, 2);
  return s.coeff(-1);
}

Rat quadratic_residue(const CurveModel& c, const DiffExpr& e, const CurvePoint& p) {
  if (e.m != 2) throw domain_error("quadratic_residue: expected a quadratic differential");
  if (p.kind != CurvePoint::Kind::Branch)
    throw domain_error("quadratic_residue: expected a ramification point");
  Series s = local_expansion(c, e, p, 2);
  if (s.valuation() < -2)
    throw domain_error("quadratic_residue: pole order exceeds 2 in the adapted coordinate");
  Rat val = s.coeff(-2);
  // rescaling-invariance self-test: the pullback under t -> 2t carries the
  // (du/dt)^2 factor, so the t^{-2} coefficient must come back unchanged
  Series s2 = expansion_with_scale(c, e, p, 2, Rat(2));
  if (s2.coeff(-2) != val) throw domain_error("quadratic_residue: rescaling self-test failed");
  return val;
}

SectionBasis section_basis(const CurveModel& c, int m) {
  if (m < 1) throw std::invalid_argument("section_basis: m >= 1");
  SectionBasis out;
  out.m = m;
  int g = c.genus();
  long deg_lm = static_cast<long>(m) * c.deg_l();
  if (c.kind == CurveModel::Kind::Rational) {
    long d = deg_lm;
    if (d < 0) throw domain_error("section_basis: deg L^m < 0, no sections");
    for (long a = 0; a <= d; ++a)
      out.basis.push_back(diff_simple(Poly::monomial(kU, {static_cast<int>(a)}, 1),
                                      Poly::constant(kU, 1), 0, m));
    out.dimension = out.basis.size();
    if (static_cast<long>(out.dimension) != d + 1 - g)
      throw domain_error("section_basis: Riemann-Roch dimension check failed");
  } else {
    bool canonical = (m == 1);
    if (!canonical && deg_lm <= 2 * g - 2)
      throw domain_error("section_basis: deg L^m <= 2g-2 special range not supported here");
    long expect = canonical ? g : (2 * m - 1) * (g - 1);
    auto infpts = points_at_infinity(c);
    auto holomorphic_at_infinity = [&](const DiffExpr& e) {
      for (const auto& ip : infpts) {
        Series s = local_expansion(c, e, ip, 2);
        if (!s.is_zero() && s.valuation() < 0) return false;
      }
      return true;
    };
    for (int k = m; k >= m - 1 && k >= 0; --k) {
      for (int a = 0;; ++a) {
        DiffExpr e = diff_simple(Poly::monomial(kU, {a}, 1), Poly::constant(kU, 1), k, m);
        if (!holomorphic_at_infinity(e)) break;
        out.basis.push_back(e);
      }
    }
    out.dimension = out.basis.size();
    if (static_cast<long>(out.dimension) != expect)
      throw domain_error("section_basis: Riemann-Roch dimension check failed");
  }
  // independence certificate: leading expansion coefficients at a fixed point
  size_t n = out.basis.size();
  int window = static_cast<int>(n) + 4;
  CurvePoint probe = (c.kind == CurveModel::Kind::Rational)
                         ? CurvePoint::finite(0, 0)
                         : CurvePoint::infinity(1);
  // rational model: expand at u = 0 (t = u)
  QMatrix cert(n, static_cast<size_t>(window));
  for (size_t i = 0; i < n; ++i) {
    Series s = (c.kind == CurveModel::Kind::Rational)
                   ? local_expansion(c, out.basis[i], CurvePoint::finite(0, 0), window)
                   : local_expansion(c, out.basis[i], probe, window);
    int base = s.is_zero() ? 0 : std::min(0, s.valuation());
    for (int k = 0; k < window; ++k) {
      int idx = base + k;
      if (idx < s.order()) cert.at(i, static_cast<size_t>(k)) = s.coeff(idx);
    }
  }
  if (cert.rank() != n) throw domain_error("section_basis: independence certificate failed");
  out.certificate = cert;
  return out;
}

std::vector<Rat> rational_roots_complete(const Poly& p) {
  check_u_poly(p);
  int d = p.degree_in(0);
  if (d < 1) throw domain_error("rational_roots_complete: constant polynomial");
  auto divisors = [](mpz_class v) {
    std::vector<mpz_class> out;
    v = abs(v);
    for (mpz_class i = 1; i * i <= v; ++i)
      if (v % i == 0) {
        out.push_back(i);
        out.push_back(v / i);
      }
    return out;
  };
  Poly rem = p;
  std::vector<Rat> roots;
  while (rem.degree_in(0) > 0) {
    auto rc = rem.coeffs_in(0);
    if (rc[0].is_zero()) {  // u divides rem
      roots.push_back(0);
      Poly q(kU);
      for (size_t i = 1; i < rc.size(); ++i)
        if (!rc[i].is_zero()) q.add_term({static_cast<int>(i - 1)}, rc[i].constant_value());
      rem = q;
      continue;
    }
    // scale all coefficients to integers, then apply the rational root theorem
    mpz_class lcm_den = 1;
    for (const auto& c : rc)
      if (!c.is_zero()) {
        mpz_class den = c.constant_value().get_den();
        lcm_den = lcm_den / gcd(lcm_den, den) * den;
      }
    auto int_of = [&](const Poly& c) {
      if (c.is_zero()) return mpz_class(0);
      Rat v = c.constant_value() * Rat(lcm_den);
      v.canonicalize();
      return v.get_num();
    };
    mpz_class c0 = int_of(rc[0]);
    mpz_class cl = int_of(rc.back());
    bool found = false;
    for (const auto& nu : divisors(c0)) {
      for (const auto& de : divisors(cl)) {
        for (int s = -1; s <= 1 && !found; s += 2) {
          Rat cand(nu * s, de);
          cand.canonicalize();
          if (sgn(rem.eval({cand})) == 0) {
            roots.push_back(cand);
            Poly lin = Poly::variable(kU, "u") - Poly::constant(kU, cand);
            auto q = poly_div_exact(rem, lin);
            if (!q) throw domain_error("deflation failed");
            rem = *q;
            found = true;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found)
      throw domain_error("polynomial does not split over Q (irrational ramification unsupported)");
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace hitchin
