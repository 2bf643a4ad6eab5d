#ifndef HITCHIN_LIEALGEBRA_HPP
#define HITCHIN_LIEALGEBRA_HPP

#include <string>
#include <vector>

#include "hitchin/qmatrix.hpp"
#include "hitchin/rootsystem.hpp"

namespace hitchin {

// Chevalley-basis model of a simple Lie algebra of type A_n or G2.
//
// Basis order: h_1..h_l (simple coroots), then e_beta over positive roots in
// root-system order, then f_beta in the same order. Elements are coefficient
// vectors in this basis. A faithful matrix realization is attached: the
// defining (n+1)-dimensional one for A_n, and for G2 the 7-dimensional
// representation whose Cartan is diag(0, l1, l2, l3, -l1, -l2, -l3).
struct LieAlgebraModel {
  RootSystem rs;
  size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<int> grading;              // height per basis element
  std::vector<QMatrix> ad;               // ad matrices of basis elements (dim x dim)
  QMatrix killing;                       // tr(ad a . ad b) on the basis
  size_t rep_dim = 0;
  std::vector<QMatrix> rep;              // attached realization per basis element

  size_t rank() const { return static_cast<size_t>(rs.rank); }
  size_t h_index(size_t i) const { return i; }
  size_t e_index(size_t pos_root) const { return rank() + pos_root; }
  size_t f_index(size_t pos_root) const { return rank() + rs.num_positive() + pos_root; }

  QVec zero() const { return QVec(dim, Rat(0)); }
  QVec basis_vec(size_t k) const;
  QVec bracket(const QVec& a, const QVec& b) const;
  QMatrix ad_of(const QVec& a) const;
  QMatrix rep_of(const QVec& a) const;
  Rat killing_pairing(const QVec& a, const QVec& b) const;
  // coroot of a root, as an element of the model (combination of h_i)
  QVec coroot_element(const Root& r) const;
};

LieAlgebraModel chevalley_algebra(const RootSystem& rs);
inline LieAlgebraModel chevalley_algebra(const TypeTag& t) {
  return chevalley_algebra(build_root_system(t));
}

// Killing form restricted to the Cartan (in simple-coroot coordinates).
QMatrix killing_on_cartan(const LieAlgebraModel& g);

// Short/long duality data for G2: an integer matrix m on coroot coordinates
// with m = sqrt(3) * l, where l is the Langlands involution on t. m maps the
// six short coroots bijectively onto the six long coroots, m(long coroots) =
// 3 * (short coroots), and m^2 = 3 * w0 for an element w0 of the Weyl group.
struct G2Duality {
  QMatrix killing_on_t;
  QMatrix scaled_map;     // m = sqrt(3) * l, integer entries
  Rat scale_sq = 3;       // m^2 = scale_sq * (element of W)
  QMatrix weyl_square;    // the w0 with m^2 = 3 * w0
  bool l_in_weyl = false;       // exact check: some w in W maps shorts to longs
  bool l_sq_in_weyl = false;
};

G2Duality killing_and_duality(const LieAlgebraModel& g);

// Validation of the structure-constant table against the attached
// realization and the Chevalley/Serre conditions; throws on failure.
void validate_model(const LieAlgebraModel& g);

}  // namespace hitchin

#endif
