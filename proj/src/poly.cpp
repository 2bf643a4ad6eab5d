#include "hitchin/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>

namespace hitchin {

bool GradedLexDesc::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return a > b;  // lexicographic, earlier variable dominates
}

Poly Poly::constant(const std::vector<std::string>& vars, const Rat& c) {
  Poly p(vars);
  p.add_term(std::vector<int>(vars.size(), 0), c);
  return p;
}

Poly Poly::variable(const std::vector<std::string>& vars, const std::string& name) {
  Poly p(vars);
  std::vector<int> e(vars.size(), 0);
  e[p.var_index(name)] = 1;
  p.add_term(std::move(e), 1);
  return p;
}

Poly Poly::monomial(const std::vector<std::string>& vars, std::vector<int> expo, const Rat& c) {
  Poly p(vars);
  p.add_term(std::move(expo), c);
  return p;
}

size_t Poly::var_index(const std::string& name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  throw std::invalid_argument("unknown variable: " + name);
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && total_degree() == 0;
}

Rat Poly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw domain_error("constant_value of non-constant polynomial");
  return terms_.begin()->second;
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.begin()->first;  // leading term has maximal degree
  return std::accumulate(e.begin(), e.end(), 0);
}

int Poly::degree_in(size_t vi) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[vi]);
  return d;
}

Rat Poly::coeff(const std::vector<int>& expo) const {
  auto it = terms_.find(expo);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(std::vector<int> expo, const Rat& c) {
  if (expo.size() != vars_.size()) throw std::invalid_argument("exponent arity mismatch");
  if (sgn(c) == 0) return;
  auto it = terms_.find(expo);
  if (it == terms_.end()) {
    terms_.emplace(std::move(expo), c);
  } else {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void Poly::check_same_vars(const Poly& o) const {
  if (vars_ != o.vars_) throw std::invalid_argument("variable-set mismatch");
}

Poly Poly::operator-() const {
  Poly r(vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  check_same_vars(o);
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  check_same_vars(o);
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  check_same_vars(o);
  Poly r(vars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      std::vector<int> e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(std::move(e), ca * cb);
    }
  return r;
}

Poly Poly::operator*(const Rat& c) const {
  Poly r(vars_);
  if (sgn(c) == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

Poly Poly::pow(unsigned int e) const {
  Poly r = Poly::constant(vars_, 1);
  Poly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    if (e >>= 1) b = b * b;
  }
  return r;
}

Poly Poly::derivative(size_t vi) const {
  Poly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[vi] == 0) continue;
    std::vector<int> d = e;
    d[vi] -= 1;
    r.add_term(std::move(d), c * e[vi]);
  }
  return r;
}

Poly Poly::compose(const std::vector<Poly>& args) const {
  if (args.size() != vars_.size()) throw std::invalid_argument("compose arity mismatch");
  std::vector<std::string> tvars = args.empty() ? vars_ : args[0].vars();
  for (const auto& a : args)
    if (a.vars() != tvars) throw std::invalid_argument("variable-set mismatch");
  // memoised powers per variable
  std::vector<std::vector<Poly>> pows(args.size());
  auto power = [&](size_t i, int e) -> const Poly& {
    auto& tab = pows[i];
    if (tab.empty()) tab.push_back(Poly::constant(tvars, 1));
    while ((int)tab.size() <= e) tab.push_back(tab.back() * args[i]);
    return tab[e];
  };
  Poly r(tvars);
  for (const auto& [e, c] : terms_) {
    Poly t = Poly::constant(tvars, c);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) t = t * power(i, e[i]);
    r = r + t;
  }
  return r;
}

Poly Poly::subst(size_t vi, const Poly& value) const {
  check_same_vars(value);
  std::vector<Poly> args;
  for (size_t i = 0; i < vars_.size(); ++i)
    args.push_back(i == vi ? value : Poly::variable(vars_, vars_[i]));
  return compose(args);
}

Poly Poly::reduce_square(size_t vi, const Poly& sq) const {
  check_same_vars(sq);
  Poly r(vars_);
  std::vector<Poly> sqpow = {Poly::constant(vars_, 1)};
  for (const auto& [e, c] : terms_) {
    int k = e[vi] / 2, rem = e[vi] % 2;
    while ((int)sqpow.size() <= k) sqpow.push_back(sqpow.back() * sq);
    std::vector<int> base = e;
    base[vi] = rem;
    r = r + Poly::monomial(vars_, base, c) * sqpow[k];
  }
  return r;
}

Rat Poly::eval(const std::vector<Rat>& point) const {
  if (point.size() != vars_.size()) throw std::invalid_argument("eval arity mismatch");
  Rat s = 0;
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) t *= rat_pow(point[i], e[i]);
    s += t;
  }
  return s;
}

Poly Poly::eval_partial(size_t vi, const Rat& value) const {
  Poly r(vars_);
  for (const auto& [e, c] : terms_) {
    std::vector<int> d = e;
    int k = d[vi];
    d[vi] = 0;
    r.add_term(std::move(d), c * rat_pow(value, k));
  }
  return r;
}

std::vector<Poly> Poly::coeffs_in(size_t vi) const {
  int d = degree_in(vi);
  if (d < 0) return {};
  std::vector<Poly> out(d + 1, Poly(vars_));
  for (const auto& [e, c] : terms_) {
    std::vector<int> r = e;
    int k = r[vi];
    r[vi] = 0;
    out[k].add_term(std::move(r), c);
  }
  return out;
}

Poly Poly::leading_coeff_in(size_t vi) const {
  auto cs = coeffs_in(vi);
  if (cs.empty()) return Poly(vars_);
  return cs.back();
}

Poly Poly::extended(const std::vector<std::string>& newvars) const {
  std::vector<size_t> pos(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(newvars.begin(), newvars.end(), vars_[i]);
    if (it == newvars.end()) throw std::invalid_argument("extended: missing variable " + vars_[i]);
    pos[i] = static_cast<size_t>(it - newvars.begin());
  }
  Poly r(newvars);
  for (const auto& [e, c] : terms_) {
    std::vector<int> ne(newvars.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
    r.add_term(std::move(ne), c);
  }
  return r;
}

// ---------------------------------------------------------------- printing

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat a = c;
    if (first) {
      if (sgn(a) < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
      a = abs(a);
    }
    bool has_vars = std::accumulate(e.begin(), e.end(), 0) > 0;
    bool coeff_shown = !has_vars || a != 1;
    if (coeff_shown) os << rat_to_string(a);
    bool need_star = coeff_shown;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << vars_[i];
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

// ----------------------------------------------------------------- parsing

namespace {

class Parser {
public:
  Parser(const std::string& s, const std::vector<std::string>& vars) : s_(s), vars_(vars) {}

  Poly run() {
    Poly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("polynomial parse error at position " + std::to_string(pos_) +
                                ": " + msg);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Poly expr() {
    bool neg = false;
    skip_ws();
    while (peek() == '+' || peek() == '-') {
      if (eat('-')) neg = !neg;
      else eat('+');
    }
    Poly p = term();
    if (neg) p = -p;
    for (;;) {
      char c = peek();
      if (c == '+') {
        eat('+');
        p = p + term();
      } else if (c == '-') {
        eat('-');
        p = p - term();
      } else {
        return p;
      }
    }
  }

  Poly term() {
    Poly p = factor();
    for (;;) {
      if (eat('*')) {
        p = p * factor();
      } else if (peek() == '/') {
        eat('/');
        long d = uint_lit();  // division by a positive integer literal only
        if (d == 0) fail("division by zero");
        p = p * rat(1, d);
      } else {
        return p;
      }
    }
  }

  Poly factor() {
    Poly b = base();
    if (eat('^')) {
      long e = uint_lit();
      b = b.pow(static_cast<unsigned int>(e));
    }
    return b;
  }

  Poly base() {
    char c = peek();
    if (c == '(') {
      eat('(');
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (c == '-') {  // unary minus inside a factor, e.g. 2*(-3)
      eat('-');
      return -base();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return rational_lit();
    if (std::isalpha(static_cast<unsigned char>(c))) return variable_lit();
    fail("expected number, variable or '('");
  }

  long uint_lit() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected integer");
    return std::strtol(s_.substr(start, pos_ - start).c_str(), nullptr, 10);
  }

  Poly rational_lit() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string num = s_.substr(start, pos_ - start);
    std::string lit = num;
    size_t save = pos_;
    if (eat('/')) {
      skip_ws();
      size_t dstart = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ == dstart) {
        pos_ = save;  // the '/' was not part of a rational literal
      } else {
        lit = num + "/" + s_.substr(dstart, pos_ - dstart);
      }
    }
    return Poly::constant(vars_, rat_from_string(lit));
  }

  Poly variable_lit() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    std::string name = s_.substr(start, pos_ - start);
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) fail("unknown variable '" + name + "'");
    return Poly::variable(vars_, name);
  }

  const std::string& s_;
  const std::vector<std::string>& vars_;
  size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(const std::string& text, const std::vector<std::string>& vars) {
  return Parser(text, vars).run();
}

// ------------------------------------------------------ division, resultant

std::optional<Poly> poly_div_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw domain_error("division by zero polynomial");
  if (a.vars() != b.vars()) throw std::invalid_argument("variable-set mismatch");
  Poly rem = a;
  Poly quot(a.vars());
  const auto& blead = *b.terms().begin();
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms().begin();
    std::vector<int> e(rlead.first.size());
    for (size_t i = 0; i < e.size(); ++i) {
      e[i] = rlead.first[i] - blead.first[i];
      if (e[i] < 0) return std::nullopt;
    }
    Poly t = Poly::monomial(a.vars(), std::move(e), rlead.second / blead.second);
    quot = quot + t;
    rem = rem - t * b;
  }
  return quot;
}

namespace {

// Fraction-free Gaussian elimination (Bareiss). Entries live in the
// polynomial ring; every division below is exact by construction.
Poly bareiss_det(std::vector<std::vector<Poly>> m, const std::vector<std::string>& vars) {
  size_t n = m.size();
  if (n == 0) return Poly::constant(vars, 1);
  int sign = 1;
  Poly prev = Poly::constant(vars, 1);
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t piv = k;
    while (piv < n && m[piv][k].is_zero()) ++piv;
    if (piv == n) return Poly(vars);  // singular
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        Poly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        auto q = poly_div_exact(num, prev);
        if (!q) throw domain_error("bareiss: non-exact division");
        m[i][j] = *q;
      }
    prev = m[k][k];
  }
  Poly d = m[n - 1][n - 1];
  return sign > 0 ? d : -d;
}

}  // namespace

Poly resultant(const Poly& p, const Poly& q, size_t vi) {
  const auto& vars = p.vars();
  if (q.vars() != vars) throw std::invalid_argument("variable-set mismatch");
  auto a = p.coeffs_in(vi);
  auto b = q.coeffs_in(vi);
  int dp = static_cast<int>(a.size()) - 1;
  int dq = static_cast<int>(b.size()) - 1;
  if (dp < 0 || dq < 0) return Poly(vars);
  if (dp == 0 && dq == 0) return Poly::constant(vars, 1);
  size_t n = static_cast<size_t>(dp + dq);
  std::vector<std::vector<Poly>> syl(n, std::vector<Poly>(n, Poly(vars)));
  for (int r = 0; r < dq; ++r)
    for (int j = 0; j <= dp; ++j) syl[r][r + j] = a[dp - j];
  for (int r = 0; r < dp; ++r)
    for (int j = 0; j <= dq; ++j) syl[dq + r][r + j] = b[dq - j];
  return bareiss_det(std::move(syl), vars);
}

Poly discriminant_univariate(const Poly& p, size_t vi) {
  int d = p.degree_in(vi);
  if (d < 1) throw domain_error("discriminant: polynomial constant in the chosen variable");
  Poly res = resultant(p, p.derivative(vi), vi);
  Poly lc = p.leading_coeff_in(vi);
  auto q = poly_div_exact(res, lc);
  if (!q) throw domain_error("discriminant: resultant not divisible by leading coefficient");
  long e = static_cast<long>(d) * (d - 1) / 2;
  return (e % 2 == 0) ? *q : -*q;
}

Poly poly_det(const std::vector<std::vector<Poly>>& m) {
  size_t n = m.size();
  if (n == 0) throw std::invalid_argument("poly_det: empty matrix");
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("poly_det: non-square matrix");
  const auto& vars = m[0][0].vars();
  if (n > 20) throw domain_error("poly_det: matrix too large");
  // minor expansion along the first available row, memoised on column masks
  std::map<std::pair<size_t, unsigned>, Poly> memo;
  std::function<Poly(size_t, unsigned)> det = [&](size_t row, unsigned mask) -> Poly {
    if (row == n) return Poly::constant(vars, 1);
    auto key = std::make_pair(row, mask);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Poly acc(vars);
    int sign = 1;
    for (size_t j = 0; j < n; ++j) {
      if (mask & (1u << j)) continue;
      if (!m[row][j].is_zero()) {
        Poly sub = det(row + 1, mask | (1u << j));
        Poly contrib = m[row][j] * sub;
        acc = (sign > 0) ? acc + contrib : acc - contrib;
      }
      sign = -sign;
    }
    memo.emplace(key, acc);
    return acc;
  };
  return det(0, 0u);
}

}  // namespace hitchin
