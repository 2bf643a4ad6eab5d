#include "hitchin/principal.hpp"

#include <algorithm>

namespace hitchin {

Epinglage unit_epinglage(const LieAlgebraModel& g) {
  Epinglage ep;
  ep.g = &g;
  ep.f_scalars.assign(g.rank(), Rat(1));
  return ep;
}

PrincipalTriple principal_triple(const Epinglage& ep) {
  const auto& g = *ep.g;
  size_t l = g.rank();
  for (const auto& c : ep.f_scalars)
    if (sgn(c) == 0) throw domain_error("epinglage scalars must be nonzero");

  // Kac labels r = 2 C^{-1} (1,...,1)^t
  QMatrix c(l, l);
  for (size_t i = 0; i < l; ++i)
    for (size_t j = 0; j < l; ++j) c.at(i, j) = g.rs.cartan[i][j];
  auto cinv = c.inverse();
  if (!cinv) throw domain_error("singular Cartan matrix (corrupt root system data)");
  QVec ones(l, Rat(1));
  QVec r = (*cinv) * ones;
  for (auto& x : r) x *= 2;

  PrincipalTriple t;
  t.g = &g;
  t.kac_labels = r;
  t.x = g.zero();
  t.y = g.zero();
  t.h = g.zero();
  // simple-root positions in the positive-root list
  for (size_t p = 0; p < g.rs.num_positive(); ++p) {
    if (g.rs.roots[p].height != 1) continue;
    size_t i = 0;
    while (g.rs.roots[p].coords[i] == 0) ++i;
    t.y[g.f_index(p)] = ep.f_scalars[i];
    t.x[g.e_index(p)] = r[i] / ep.f_scalars[i];
  }
  for (size_t i = 0; i < l; ++i) t.h[g.h_index(i)] = r[i];

  // invariants of the triple, checked exactly
  auto scaled = [](const QVec& v, const Rat& s) {
    QVec o = v;
    for (auto& x : o) x *= s;
    return o;
  };
  if (g.bracket(t.x, t.y) != t.h) throw domain_error("principal triple: [x,y] != h");
  if (g.bracket(t.h, t.x) != scaled(t.x, 2)) throw domain_error("principal triple: [h,x] != 2x");
  if (g.bracket(t.h, t.y) != scaled(t.y, -2)) throw domain_error("principal triple: [h,y] != -2y");
  if (g.ad_of(t.y).kernel().size() != l)
    throw domain_error("principal triple: y is not regular");
  // alpha_i(h) = 2 for every simple root, through the Cartan matrix
  for (size_t i = 0; i < l; ++i) {
    Rat pairing = 0;
    for (size_t j = 0; j < l; ++j) pairing += Rat(g.rs.cartan[i][j]) * r[j];
    if (pairing != 2) throw domain_error("principal triple: alpha_i(h) != 2");
  }

  // exponents via the decomposition
  t.exponents = ad_decomposition(t).exponents;
  return t;
}

AdDecomposition ad_decomposition(const PrincipalTriple& t) {
  const auto& g = *t.g;
  QMatrix adh = g.ad_of(t.h);
  QMatrix adx = g.ad_of(t.x);
  QMatrix ady = g.ad_of(t.y);

  AdDecomposition d;
  d.highest = adx.kernel();
  d.lowest = ady.kernel();
  if (d.highest.size() != g.rank() || d.lowest.size() != g.rank())
    throw domain_error("ad_decomposition: nilpotents are not regular");

  // grade ker(ad x) by the ad_h eigenvalue: v is a weight vector since
  // z(x) is spanned by highest weight vectors; its eigenvalue is 2 m_i
  auto eigenvalue_of = [&](const QVec& v) {
    QVec hv = adh * v;
    size_t k = 0;
    while (k < hv.size() && sgn(v[k]) == 0) ++k;
    Rat ev = hv[k] / v[k];
    QVec check = v;
    for (auto& x : check) x *= ev;
    if (check != hv) throw domain_error("ad_decomposition: z(x) not h-homogeneous");
    if (!rat_is_integer(ev)) throw domain_error("ad_decomposition: non-integer h-eigenvalue");
    long e = static_cast<long>(ev.get_num().get_si());
    if (e % 2 != 0) throw domain_error("ad_decomposition: odd h-eigenvalue on z(x)");
    return static_cast<int>(e / 2);
  };
  // ker(ad x) basis vectors may mix equal eigenvalues only; for A_n and G2
  // the exponents are distinct, so each kernel vector is homogeneous.
  std::vector<int> ms;
  for (const auto& v : d.highest) ms.push_back(eigenvalue_of(v));
  std::vector<size_t> idx(ms.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return ms[a] < ms[b]; });
  std::vector<QVec> sorted;
  for (size_t i : idx) {
    d.exponents.push_back(ms[i]);
    sorted.push_back(d.highest[i]);
  }
  d.highest = sorted;
  size_t total = 0;
  for (int m : d.exponents) {
    d.isotypic.emplace_back(m, static_cast<size_t>(2 * m + 1));
    total += static_cast<size_t>(2 * m + 1);
  }
  if (total != g.dim) throw domain_error("ad_decomposition: sum(2m_i+1) != dim g");

  // sort the lowest-weight basis to match (eigenvalues -2 m_i)
  auto low_eigen = [&](const QVec& v) {
    QVec hv = adh * v;
    size_t k = 0;
    while (k < hv.size() && sgn(v[k]) == 0) ++k;
    return -static_cast<int>(Rat(hv[k] / v[k]).get_num().get_si()) / 2;
  };
  std::vector<int> lm;
  for (const auto& v : d.lowest) lm.push_back(low_eigen(v));
  std::vector<size_t> lidx(lm.size());
  for (size_t i = 0; i < lidx.size(); ++i) lidx[i] = i;
  std::sort(lidx.begin(), lidx.end(), [&](size_t a, size_t b) { return lm[a] < lm[b]; });
  std::vector<QVec> lsorted;
  for (size_t i : lidx) lsorted.push_back(d.lowest[i]);
  d.lowest = lsorted;
  return d;
}

SplittingMap splitting_map(const PrincipalTriple& t) {
  const auto& g = *t.g;
  QMatrix adx = g.ad_of(t.x);
  QMatrix ady = g.ad_of(t.y);

  SplittingMap s;
  s.g = &g;
  // column bases
  std::vector<QVec> imy_cols, imx_cols, kerx = adx.kernel();
  for (size_t j = 0; j < g.dim; ++j) {
    QVec cy(g.dim), cx(g.dim);
    for (size_t i = 0; i < g.dim; ++i) {
      cy[i] = ady.at(i, j);
      cx[i] = adx.at(i, j);
    }
    imy_cols.push_back(cy);
    imx_cols.push_back(cx);
  }
  auto imy = column_space_basis(imy_cols);
  auto imx = column_space_basis(imx_cols);
  s.image_ad_y = imy;
  size_t k = imy.size();
  if (imx.size() != k || k + kerx.size() != g.dim)
    throw domain_error("splitting_map: dimension bookkeeping failed");

  // solve ad_y(P(w)) = w with P(w) in Im(ad_x), for w running over a
  // decomposition basis [Im(ad_y) | ker(ad_x)]; P kills the second block.
  QMatrix decomp(g.dim, g.dim);
  for (size_t j = 0; j < k; ++j)
    for (size_t i = 0; i < g.dim; ++i) decomp.at(i, j) = imy[j][i];
  for (size_t j = 0; j < kerx.size(); ++j)
    for (size_t i = 0; i < g.dim; ++i) decomp.at(i, k + j) = kerx[j][i];
  auto dinv = decomp.inverse();
  if (!dinv) throw domain_error("splitting_map: Im(ad_y) + ker(ad_x) is not all of g");

  // ad_y restricted to Im(ad_x), in the imx basis
  QMatrix a(g.dim, k);
  for (size_t j = 0; j < k; ++j) {
    QVec col = ady * imx[j];
    for (size_t i = 0; i < g.dim; ++i) a.at(i, j) = col[i];
  }
  QMatrix p(g.dim, g.dim);
  for (size_t j = 0; j < k; ++j) {
    auto z = a.solve(imy[j]);
    if (!z) throw domain_error("splitting_map: ad_y not surjective onto Im(ad_y)");
    QVec u(g.dim, Rat(0));
    for (size_t m = 0; m < k; ++m)
      for (size_t i = 0; i < g.dim; ++i) u[i] += (*z)[m] * imx[m][i];
    // sanity: [y, u] = w exactly
    if (ady * u != imy[j]) throw domain_error("splitting_map: solve failed");
    for (size_t i = 0; i < g.dim; ++i) p.at(i, j) = u[i];  // in decomp coordinates
  }
  // assemble total matrix: P(std basis) = P(decomp coords) . dinv
  s.p = p * (*dinv);
  return s;
}

SliceSeriesResult slice_series(const PrincipalTriple& t, const SplittingMap& sp,
                               const QVec& h_elem, const QVec& v) {
  const auto& g = *t.g;
  QMatrix adx = g.ad_of(t.x);
  QVec zx = adx * h_elem;
  for (const auto& q : zx)
    if (sgn(q) != 0) throw domain_error("slice_series: h_elem is not in z(x)");
  QMatrix adh = g.ad_of(h_elem);
  int big_m = t.g->rs.highest_height;

  SliceSeriesResult out;
  out.value = v;
  QVec term = v;
  int sign = 1;
  out.nonzero_terms = 1;
  for (int k = 1; k <= big_m + 1; ++k) {
    term = sp.apply(adh * term);
    sign = -sign;
    bool nz = false;
    for (const auto& q : term) nz = nz || sgn(q) != 0;
    if (!nz) break;
    ++out.nonzero_terms;
    for (size_t i = 0; i < g.dim; ++i) out.value[i] += sign > 0 ? term[i] : -term[i];
  }
  QVec ky = g.ad_of(t.y) * out.value;
  QVec kx = adx * out.value;
  out.lands_in_ker_ad_y = std::all_of(ky.begin(), ky.end(), [](const Rat& q) { return sgn(q) == 0; });
  out.lands_in_ker_ad_x = std::all_of(kx.begin(), kx.end(), [](const Rat& q) { return sgn(q) == 0; });
  return out;
}

}  // namespace hitchin
