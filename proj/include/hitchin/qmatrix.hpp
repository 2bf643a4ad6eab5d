#ifndef HITCHIN_QMATRIX_HPP
#define HITCHIN_QMATRIX_HPP

#include <optional>
#include <vector>

#include "hitchin/rational.hpp"

namespace hitchin {

using QVec = std::vector<Rat>;

// Dense matrix over the rationals with exact linear algebra. Sizes here are
// tiny (algebra dimension at most 14), so plain Gaussian elimination is fine.
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols, Rat(0)) {}
  static QMatrix identity(size_t n);
  static QMatrix diagonal(const QVec& d);

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  Rat& at(size_t i, size_t j) { return a_[i * c_ + j]; }
  const Rat& at(size_t i, size_t j) const { return a_[i * c_ + j]; }

  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator*(const Rat& s) const;
  QVec operator*(const QVec& v) const;
  bool operator==(const QMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  bool operator!=(const QMatrix& o) const { return !(*this == o); }

  QMatrix transposed() const;
  Rat trace() const;
  bool is_zero() const;

  size_t rank() const;
  Rat det() const;
  std::optional<QMatrix> inverse() const;
  // Basis of the right null space, as columns.
  std::vector<QVec> kernel() const;
  // One solution of A x = b, if any.
  std::optional<QVec> solve(const QVec& b) const;
  // Characteristic polynomial coefficients c_0..c_n with
  // det(lambda I - A) = sum c_k lambda^k (c_n = 1), by Faddeev-LeVerrier.
  QVec char_poly() const;

private:
  size_t r_ = 0, c_ = 0;
  std::vector<Rat> a_;
};

QMatrix commutator(const QMatrix& a, const QMatrix& b);

// Columns spanning the column space of a list of vectors (echelon-reduced).
std::vector<QVec> column_space_basis(const std::vector<QVec>& vecs);

// Coordinates of v in the span of basis vectors, if representable.
std::optional<QVec> coordinates_in_span(const std::vector<QVec>& basis, const QVec& v);

}  // namespace hitchin

#endif
