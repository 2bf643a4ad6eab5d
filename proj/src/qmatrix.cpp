#include "hitchin/qmatrix.hpp"

#include <algorithm>

namespace hitchin {

QMatrix QMatrix::identity(size_t n) {
  QMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::diagonal(const QVec& d) {
  QMatrix m(d.size(), d.size());
  for (size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix shape mismatch");
  QMatrix m = *this;
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
  return m;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix shape mismatch");
  QMatrix m = *this;
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (c_ != o.r_) throw std::invalid_argument("matrix shape mismatch");
  QMatrix m(r_, o.c_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t k = 0; k < c_; ++k) {
      const Rat& aik = at(i, k);
      if (sgn(aik) == 0) continue;
      for (size_t j = 0; j < o.c_; ++j) m.at(i, j) += aik * o.at(k, j);
    }
  return m;
}

QMatrix QMatrix::operator*(const Rat& s) const {
  QMatrix m = *this;
  for (auto& x : m.a_) x *= s;
  return m;
}

QVec QMatrix::operator*(const QVec& v) const {
  if (c_ != v.size()) throw std::invalid_argument("matrix shape mismatch");
  QVec out(r_, Rat(0));
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j)
      if (sgn(at(i, j)) != 0) out[i] += at(i, j) * v[j];
  return out;
}

QMatrix QMatrix::transposed() const {
  QMatrix m(c_, r_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Rat QMatrix::trace() const {
  Rat t = 0;
  for (size_t i = 0; i < std::min(r_, c_); ++i) t += at(i, i);
  return t;
}

bool QMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rat& x) { return sgn(x) == 0; });
}

namespace {

// Row echelon form in place; returns pivot columns. If sign != nullptr the
// permutation sign is tracked (for determinants).
std::vector<size_t> echelon(QMatrix& m, int* sign) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t p = row;
    while (p < m.rows() && sgn(m.at(p, col)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
      if (sign) *sign = -*sign;
    }
    Rat inv = Rat(1) / m.at(row, col);
    for (size_t i = row + 1; i < m.rows(); ++i) {
      if (sgn(m.at(i, col)) == 0) continue;
      Rat f = m.at(i, col) * inv;
      for (size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Reduced row echelon form; returns pivot columns.
std::vector<size_t> rref(QMatrix& m) {
  auto pivots = echelon(m, nullptr);
  for (size_t r = pivots.size(); r-- > 0;) {
    size_t col = pivots[r];
    Rat inv = Rat(1) / m.at(r, col);
    for (size_t j = col; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (size_t i = 0; i < r; ++i) {
      Rat f = m.at(i, col);
      if (sgn(f) == 0) continue;
      for (size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
  }
  return pivots;
}

}  // namespace

size_t QMatrix::rank() const {
  QMatrix m = *this;
  return echelon(m, nullptr).size();
}

Rat QMatrix::det() const {
  if (r_ != c_) throw std::invalid_argument("det of non-square matrix");
  QMatrix m = *this;
  int sign = 1;
  auto pivots = echelon(m, &sign);
  if (pivots.size() < r_) return 0;
  Rat d = sign;
  for (size_t i = 0; i < r_; ++i) d *= m.at(i, i);
  return d;
}

std::optional<QMatrix> QMatrix::inverse() const {
  if (r_ != c_) throw std::invalid_argument("inverse of non-square matrix");
  QMatrix aug(r_, 2 * c_);
  for (size_t i = 0; i < r_; ++i) {
    for (size_t j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, c_ + i) = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() < r_ || pivots.back() >= c_) return std::nullopt;
  QMatrix inv(r_, c_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j) inv.at(i, j) = aug.at(i, c_ + j);
  return inv;
}

std::vector<QVec> QMatrix::kernel() const {
  QMatrix m = *this;
  auto pivots = rref(m);
  std::vector<bool> is_pivot(c_, false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<QVec> basis;
  for (size_t free = 0; free < c_; ++free) {
    if (is_pivot[free]) continue;
    QVec v(c_, Rat(0));
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVec> QMatrix::solve(const QVec& b) const {
  if (b.size() != r_) throw std::invalid_argument("solve shape mismatch");
  QMatrix aug(r_, c_ + 1);
  for (size_t i = 0; i < r_; ++i) {
    for (size_t j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, c_) = b[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == c_) return std::nullopt;  // inconsistent
  QVec x(c_, Rat(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, c_);
  return x;
}

QVec QMatrix::char_poly() const {
  if (r_ != c_) throw std::invalid_argument("char_poly of non-square matrix");
  size_t n = r_;
  // Faddeev-LeVerrier: M_1 = A, c_{n-k} = -tr(A M_k)/k, M_{k+1} = A M_k + c_{n-k} I
  QVec c(n + 1, Rat(0));
  c[n] = 1;
  QMatrix m = QMatrix::identity(n);
  for (size_t k = 1; k <= n; ++k) {
    m = *this * m;
    Rat ck = -m.trace() / Rat(static_cast<long>(k));
    c[n - k] = ck;
    for (size_t i = 0; i < n; ++i) m.at(i, i) += ck;
  }
  return c;
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

std::vector<QVec> column_space_basis(const std::vector<QVec>& vecs) {
  if (vecs.empty()) return {};
  size_t dim = vecs[0].size();
  QMatrix m(dim, vecs.size());
  for (size_t j = 0; j < vecs.size(); ++j)
    for (size_t i = 0; i < dim; ++i) m.at(i, j) = vecs[j][i];
  QMatrix e = m;
  auto pivots = echelon(e, nullptr);
  std::vector<QVec> basis;
  for (size_t p : pivots) basis.push_back(vecs[p]);
  return basis;
}

std::optional<QVec> coordinates_in_span(const std::vector<QVec>& basis, const QVec& v) {
  if (basis.empty()) return std::nullopt;
  size_t dim = basis[0].size();
  QMatrix m(dim, basis.size());
  for (size_t j = 0; j < basis.size(); ++j)
    for (size_t i = 0; i < dim; ++i) m.at(i, j) = basis[j][i];
  return m.solve(v);
}

}  // namespace hitchin
