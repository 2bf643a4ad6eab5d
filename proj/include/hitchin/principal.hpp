#ifndef HITCHIN_PRINCIPAL_HPP
#define HITCHIN_PRINCIPAL_HPP

#include <vector>

#include "hitchin/liealgebra.hpp"

namespace hitchin {

// Epinglage data: a choice of nonzero negative simple root vectors, recorded
// as one scalar per simple root (each g_{-alpha_i} is one-dimensional).
struct Epinglage {
  const LieAlgebraModel* g = nullptr;
  QVec f_scalars;  // c_i != 0; f_{alpha_i} = c_i * basis f vector
};

Epinglage unit_epinglage(const LieAlgebraModel& g);

struct PrincipalTriple {
  const LieAlgebraModel* g = nullptr;
  QVec x, h, y;
  std::vector<Rat> kac_labels;  // r_i with h = sum r_i coroot_i
  std::vector<int> exponents;   // from the ad-h decomposition
};

// The sl(2)-triple {y = sum f_i, h = 2 rho-check, x = sum r_i e_i} attached
// to epinglage data. Kac labels come from the inverse Cartan matrix and are
// cross-checked against alpha_i(h) = 2.
PrincipalTriple principal_triple(const Epinglage& ep);

struct AdDecomposition {
  std::vector<int> exponents;                  // m_i with multiplicity, ascending
  std::vector<std::pair<int, size_t>> isotypic;  // (m_i, dim 2m_i+1)
  std::vector<QVec> highest;                   // basis of ker ad x, graded by 2m_i
  std::vector<QVec> lowest;                    // basis of ker ad y, graded by -2m_i
};

AdDecomposition ad_decomposition(const PrincipalTriple& t);

// The splitting P of ad_y induced by ad_x: for w in Im(ad_y), P(w) is the
// unique element of Im(ad_x) with [y, P(w)] = w. Extended by zero on the
// complementary summand ker(ad_x), which makes P a total endomorphism; the
// series below only ever uses it through that extension.
struct SplittingMap {
  const LieAlgebraModel* g = nullptr;
  std::vector<QVec> image_ad_y;  // domain basis
  QMatrix p;                     // total matrix (zero on ker ad_x)
  QVec apply(const QVec& w) const { return p * w; }
};

SplittingMap splitting_map(const PrincipalTriple& t);

struct SliceSeriesResult {
  QVec value;
  size_t nonzero_terms = 0;
  bool lands_in_ker_ad_y = false;  // diagnostic only; not asserted
  bool lands_in_ker_ad_x = false;
};

// sum_{k=0}^{M} (-1)^k (P o ad_h)^k (v); terminates because P o ad_h raises
// the height grading. Requires h_elem in z(x).
SliceSeriesResult slice_series(const PrincipalTriple& t, const SplittingMap& p,
                               const QVec& h_elem, const QVec& v);

}  // namespace hitchin

#endif
