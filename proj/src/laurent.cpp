#include "hitchin/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace hitchin {

void Series::normalize() {
  // drop known-zero leading coefficients and anything at or past ord_
  size_t lead = 0;
  while (lead < c_.size() && sgn(c_[lead]) == 0) ++lead;
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + lead);
    lo_ += static_cast<int>(lead);
  }
  if (lo_ + static_cast<int>(c_.size()) > ord_) {
    int keep = ord_ - lo_;
    c_.resize(keep > 0 ? static_cast<size_t>(keep) : 0);
  }
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  if (c_.empty()) lo_ = 0;
}

Series Series::zero(std::string var, int ord) {
  Series s;
  s.var_ = std::move(var);
  s.ord_ = ord;
  return s;
}

Series Series::x(std::string var, int ord) { return monomial(std::move(var), 1, 1, ord); }

Series Series::constant(std::string var, const Rat& c, int ord) {
  return monomial(std::move(var), 0, c, ord);
}

Series Series::monomial(std::string var, int k, const Rat& c, int ord) {
  Series s;
  s.var_ = std::move(var);
  s.ord_ = ord;
  if (k < ord && sgn(c) != 0) {
    s.lo_ = k;
    s.c_ = {c};
  }
  return s;
}

int Series::valuation() const { return c_.empty() ? ord_ : lo_; }

Rat Series::coeff(int k) const {
  if (k >= ord_) throw domain_error("series coefficient beyond truncation order");
  if (k < lo_ || k >= lo_ + static_cast<int>(c_.size())) return 0;
  return c_[static_cast<size_t>(k - lo_)];
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

Series Series::operator+(const Series& o) const {
  Series r;
  r.var_ = var_;
  r.ord_ = std::min(ord_, o.ord_);
  int lo = std::min(c_.empty() ? r.ord_ : lo_, o.c_.empty() ? r.ord_ : o.lo_);
  if (lo >= r.ord_) return r;
  r.lo_ = lo;
  r.c_.assign(static_cast<size_t>(r.ord_ - lo), 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    int k = lo_ + static_cast<int>(i);
    if (k < r.ord_) r.c_[static_cast<size_t>(k - lo)] += c_[i];
  }
  for (size_t i = 0; i < o.c_.size(); ++i) {
    int k = o.lo_ + static_cast<int>(i);
    if (k < r.ord_) r.c_[static_cast<size_t>(k - lo)] += o.c_[i];
  }
  r.normalize();
  return r;
}

Series Series::operator-(const Series& o) const { return *this + (-o); }

Series Series::operator*(const Series& o) const {
  Series r;
  r.var_ = var_;
  // truncation: a*b known through min(ord_a + val_b, ord_b + val_a)
  int va = valuation(), vb = o.valuation();
  r.ord_ = std::min(ord_ + vb, o.ord_ + va);
  if (c_.empty() || o.c_.empty()) return r;
  r.lo_ = lo_ + o.lo_;
  if (r.lo_ >= r.ord_) return r;
  r.c_.assign(static_cast<size_t>(r.ord_ - r.lo_), 0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) {
      int k = lo_ + static_cast<int>(i) + o.lo_ + static_cast<int>(j);
      if (k < r.ord_) r.c_[static_cast<size_t>(k - r.lo_)] += c_[i] * o.c_[j];
    }
  r.normalize();
  return r;
}

Series Series::operator*(const Rat& s) const {
  if (sgn(s) == 0) return zero(var_, ord_);
  Series r = *this;
  for (auto& q : r.c_) q *= s;
  return r;
}

Series Series::shifted(int k) const {
  Series r = *this;
  r.lo_ += k;
  r.ord_ += k;
  return r;
}

Series Series::inverse() const {
  if (c_.empty()) throw domain_error("inverse of series that vanishes to truncation order");
  // write *this = c0 t^lo (1 + u), invert the unit by Newton iteration
  int n = ord_ - lo_;  // relative precision available
  Series unit = shifted(-lo_);                   // valuation 0, known mod t^n
  Rat c0 = unit.c_[0];
  Series g = Series::constant(var_, Rat(1) / c0, 1);
  int prec = 1;
  while (prec < n) {
    prec = std::min(2 * prec, n);
    g = g.lifted(prec);
    Series u = unit.truncated(prec);
    g = (g * (Series::constant(var_, 2, prec) - (u * g).truncated(prec))).truncated(prec);
  }
  return g.lifted(n).shifted(-lo_);
}

Series Series::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  if (e == 0) return Series::constant(var_, 1, ord_);
  Series r = *this;
  for (int i = 1; i < e; ++i) r = r * *this;
  return r;
}

Series Series::derivative() const {
  Series r;
  r.var_ = var_;
  r.ord_ = ord_ - 1;
  if (c_.empty()) return r;
  r.lo_ = lo_ - 1;
  r.c_.assign(c_.size(), 0);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * (lo_ + static_cast<int>(i));
  r.normalize();
  return r;
}

Series Series::sqrt() const {
  if (c_.empty()) throw domain_error("sqrt of series that vanishes to truncation order");
  if (lo_ % 2 != 0) throw domain_error("sqrt: odd valuation");
  Series unit = shifted(-lo_);
  int n = unit.ord_;
  Rat c0 = rat_sqrt(unit.c_[0]);  // throws if not a perfect square
  Series g = Series::constant(var_, c0, 1);
  int prec = 1;
  while (prec < n) {
    prec = std::min(2 * prec, n);
    g = g.lifted(prec);
    Series u = unit.truncated(prec);
    g = ((g + u / g) * Rat(1, 2)).truncated(prec);
  }
  return g.lifted(n).shifted(lo_ / 2);
}

Series Series::compose(const Series& inner) const {
  if (lo_ < 0) throw domain_error("compose: outer series has a pole");
  if (inner.valuation() < 1) throw domain_error("compose: inner series needs valuation >= 1");
  int ord = std::min(ord_, inner.ord_);
  Series r = Series::zero(var_, ord);
  Series p = Series::constant(var_, 1, ord);
  int kcur = 0;  // p = inner^kcur, advanced incrementally
  for (size_t i = 0; i < c_.size(); ++i) {
    int k = lo_ + static_cast<int>(i);
    while (kcur < k) {
      p = (p * inner).truncated(ord);
      ++kcur;
    }
    if (sgn(c_[i]) != 0) r = r + p * c_[i];
  }
  return r.truncated(ord);
}

Series Series::truncated(int new_ord) const {
  Series r = *this;
  if (new_ord < r.ord_) {
    r.ord_ = new_ord;
    r.normalize();
  }
  return r;
}

Series Series::lifted(int new_ord) const {
  Series r = *this;
  if (new_ord > r.ord_) r.ord_ = new_ord;
  return r;
}

bool Series::same_through_order(const Series& o) const {
  int ord = std::min(ord_, o.ord_);
  int lo = std::min(valuation(), o.valuation());
  for (int k = lo; k < ord; ++k)
    if (coeff(k) != o.coeff(k)) return false;
  return true;
}

std::string Series::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    int k = lo_ + static_cast<int>(i);
    Rat a = c_[i];
    if (first) {
      if (sgn(a) < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
      a = abs(a);
    }
    if (k == 0 || a != 1) os << rat_to_string(a);
    if (k != 0) {
      if (a != 1) os << "*";
      os << var_;
      if (k != 1) os << "^" << k;
    }
    first = false;
  }
  if (first) os << "0";
  os << " + O(" << var_ << "^" << ord_ << ")";
  return os.str();
}

Series series_shift(const Poly& p, size_t vi, const Rat& center, const std::string& tvar,
                    int ord) {
  if (p.vars().size() != 1 || vi != 0)
    throw std::invalid_argument("series_shift expects a univariate polynomial");
  auto cs = p.coeffs_in(vi);
  Series t = Series::x(tvar, ord);
  Series arg = t + Series::constant(tvar, center, ord);
  Series acc = Series::zero(tvar, ord);
  for (size_t i = cs.size(); i-- > 0;) {
    acc = acc * arg;
    if (!cs[i].is_zero()) acc = acc + Series::constant(tvar, cs[i].constant_value(), ord);
  }
  return acc;
}

Series series_rational(const Poly& num, const Poly& den, size_t vi, const Rat& center,
                       const std::string& tvar, int ord) {
  // pad the working order so that pole valuations do not eat the request
  auto dser0 = series_shift(den, vi, center, tvar, ord + 1);
  int pad = dser0.is_zero() ? 0 : dser0.valuation();
  int work = ord + pad + 1;
  Series nser = series_shift(num, vi, center, tvar, work);
  Series dser = series_shift(den, vi, center, tvar, work);
  if (dser.is_zero()) throw domain_error("series_rational: denominator vanishes identically");
  return (nser / dser).truncated(ord);
}

Series solve_square_branch(const Poly& g, size_t vi, const Rat& center, const std::string& tvar,
                           int ord) {
  if (g.vars().size() != 1 || vi != 0)
    throw std::invalid_argument("solve_square_branch expects a univariate polynomial");
  Rat g0 = g.eval({center});
  if (sgn(g0) != 0) throw domain_error("solve_square_branch: center is not a zero of g");
  Rat g1 = g.derivative(vi).eval({center});
  if (sgn(g1) == 0) throw domain_error("solve_square_branch: center is not a simple zero of g");
  // x(t) solves x = t^2 / h(x), with g(center + x) = x h(x); gains two orders
  // of accuracy per pass.
  Series t2 = Series::monomial(tvar, 2, 1, ord);
  Series x = Series::zero(tvar, ord);
  auto cs = g.coeffs_in(vi);
  auto h_of = [&](const Series& xs) {
    // h(x) = g(center + x)/x computed termwise from the Taylor shift of g
    Series arg = xs + Series::constant(tvar, center, ord);
    Series acc = Series::zero(tvar, ord);
    for (size_t i = cs.size(); i-- > 0;) {
      acc = acc * arg;
      if (!cs[i].is_zero()) acc = acc + Series::constant(tvar, cs[i].constant_value(), ord);
    }
    return acc;  // this is g(center + x) = x*h(x)
  };
  x = t2 * (Rat(1) / g1);
  for (int pass = 0; pass < ord / 2 + 2; ++pass) {
    Series gx = h_of(x);            // = x * h(x)
    Series h = gx / x;              // valuation-0 series
    Series xn = (t2 / h).truncated(ord);
    if (xn.same_through_order(x)) { x = xn; break; }
    x = xn;
  }
  // certify: g(center + x) = t^2 through the truncation order
  Series check = h_of(x) - t2;
  if (!check.is_zero())
    throw domain_error("solve_square_branch: iteration failed to certify");
  return x + Series::constant(tvar, center, ord);
}

}  // namespace hitchin
