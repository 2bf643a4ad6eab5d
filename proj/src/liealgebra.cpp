#include "hitchin/liealgebra.hpp"

#include <algorithm>
#include <sstream>

namespace hitchin {

namespace {

std::string root_label(const char* kind, const std::vector<int>& coords) {
  std::ostringstream os;
  os << kind << "[";
  for (size_t i = 0; i < coords.size(); ++i) {
    if (i) os << ",";
    os << coords[i];
  }
  os << "]";
  return os.str();
}

// Coordinates of a rep matrix in the span of the basis rep matrices.
class RepCoords {
public:
  explicit RepCoords(const std::vector<QMatrix>& basis) {
    size_t n = basis.size();
    size_t rows = basis[0].rows() * basis[0].cols();
    m_ = QMatrix(rows, n);
    for (size_t j = 0; j < n; ++j)
      for (size_t r = 0; r < basis[j].rows(); ++r)
        for (size_t c = 0; c < basis[j].cols(); ++c)
          m_.at(r * basis[j].cols() + c, j) = basis[j].at(r, c);
    if (m_.rank() != n) throw domain_error("attached realization is not faithful on the basis");
  }
  QVec coords(const QMatrix& x) const {
    QVec v(x.rows() * x.cols());
    for (size_t r = 0; r < x.rows(); ++r)
      for (size_t c = 0; c < x.cols(); ++c) v[r * x.cols() + c] = x.at(r, c);
    auto sol = m_.solve(v);
    if (!sol) throw domain_error("matrix outside the algebra span");
    return *sol;
  }

private:
  QMatrix m_;
};

std::vector<QMatrix> an_rep_basis(const RootSystem& rs) {
  size_t n = rs.rank;
  size_t N = n + 1;
  std::vector<QMatrix> out;
  for (size_t i = 0; i < n; ++i) {
    QMatrix h(N, N);
    h.at(i, i) = 1;
    h.at(i + 1, i + 1) = -1;
    out.push_back(h);
  }
  // positive root alpha_i + ... + alpha_{j-1} <-> E_{i,j}
  auto root_span = [&](const std::vector<int>& c) {
    size_t i = 0;
    while (i < n && c[i] == 0) ++i;
    size_t j = i;
    while (j < n && c[j] == 1) ++j;
    return std::make_pair(i, j);  // rows [i, j] inclusive-exclusive on simple chain
  };
  for (size_t p = 0; p < rs.num_positive(); ++p) {
    auto [i, j] = root_span(rs.roots[p].coords);
    QMatrix e(N, N);
    e.at(i, j) = 1;
    out.push_back(e);
  }
  for (size_t p = 0; p < rs.num_positive(); ++p) {
    auto [i, j] = root_span(rs.roots[p].coords);
    QMatrix f(N, N);
    f.at(j, i) = 1;
    out.push_back(f);
  }
  return out;
}

// Chevalley generators of G2 in the 7-dimensional representation, in the
// weight basis (v0; v_{m1}, v_{m2}, v_{m3}; v_{-m1}, v_{-m2}, v_{-m3}) with
// m1 = a1, m2 = a1+a2, m3 = -(2a1+a2). Cross relations and Serre relations
// hold for this choice; validate_model re-checks everything exactly.
struct G2Gens {
  QMatrix e1{7, 7}, f1{7, 7}, h1{7, 7}, e2{7, 7}, f2{7, 7}, h2{7, 7};
  G2Gens() {
    e1.at(0, 4) = 2; e1.at(1, 0) = 1; e1.at(6, 2) = 1; e1.at(5, 3) = 1;
    f1.at(4, 0) = 1; f1.at(0, 1) = 2; f1.at(2, 6) = 1; f1.at(3, 5) = 1;
    e2.at(2, 1) = 1; e2.at(4, 5) = 1;
    f2.at(1, 2) = 1; f2.at(5, 4) = 1;
    QVec d1 = {0, 2, -1, -1, -2, 1, 1};
    QVec d2 = {0, -1, 1, 0, 1, -1, 0};
    h1 = QMatrix::diagonal(d1);
    h2 = QMatrix::diagonal(d2);
  }
};

std::vector<QMatrix> g2_rep_basis(const RootSystem& rs) {
  G2Gens gen;
  std::vector<QMatrix> hs = {gen.h1, gen.h2};
  std::vector<QMatrix> es(rs.num_positive()), fs(rs.num_positive());
  // positive roots in rs order (height, lex): a2=(0,1), a1=(1,0), a1+a2,
  // 2a1+a2, 3a1+a2, 3a1+2a2
  auto find_pos = [&](int c1, int c2) -> size_t {
    for (size_t p = 0; p < rs.num_positive(); ++p)
      if (rs.roots[p].coords[0] == c1 && rs.roots[p].coords[1] == c2) return p;
    throw domain_error("g2 root lookup failed");
  };
  auto in_roots = [&](int c1, int c2) {
    for (const auto& r : rs.roots)
      if (r.coords[0] == c1 && r.coords[1] == c2) return true;
    return false;
  };
  es[find_pos(1, 0)] = gen.e1;
  fs[find_pos(1, 0)] = gen.f1;
  es[find_pos(0, 1)] = gen.e2;
  fs[find_pos(0, 1)] = gen.f2;
  // build the rest by bracketing a simple generator with a lower root: for
  // beta = alpha_i + gamma, e_beta = [e_i, e_gamma] / (p+1) where p is the
  // largest k with gamma - k alpha_i a root (Chevalley normalisation)
  for (size_t p = 0; p < rs.num_positive(); ++p) {
    const auto& beta = rs.roots[p].coords;
    if (rs.roots[p].height == 1) continue;
    for (int i = 0; i < 2; ++i) {
      int g1 = beta[0] - (i == 0 ? 1 : 0);
      int g2 = beta[1] - (i == 1 ? 1 : 0);
      if (g1 < 0 || g2 < 0 || !in_roots(g1, g2)) continue;
      size_t gi = find_pos(g1, g2);
      if (es[gi].rows() == 0) continue;  // parent not built yet
      int pstr = 0;
      while (in_roots(g1 - (i == 0 ? pstr + 1 : 0), g2 - (i == 1 ? pstr + 1 : 0))) ++pstr;
      const QMatrix& ei = (i == 0) ? gen.e1 : gen.e2;
      const QMatrix& fi = (i == 0) ? gen.f1 : gen.f2;
      Rat inv = Rat(1, pstr + 1);
      es[p] = commutator(ei, es[gi]) * inv;
      fs[p] = commutator(fi, fs[gi]) * inv;
      break;
    }
    if (es[p].rows() == 0) throw domain_error("g2 construction: missing parent root");
  }
  // normalise f_beta so that [e_beta, f_beta] equals the coroot of beta
  for (size_t p = 0; p < rs.num_positive(); ++p) {
    QMatrix want(7, 7);
    for (int i = 0; i < 2; ++i) {
      const QMatrix& hi = (i == 0) ? gen.h1 : gen.h2;
      want = want + hi * rs.roots[p].coroot[i];
    }
    QMatrix got = commutator(es[p], fs[p]);
    // got must be a rational multiple of want; find it from any nonzero entry
    Rat c;
    bool found = false;
    for (size_t i = 0; i < 7 && !found; ++i)
      if (sgn(want.at(i, i)) != 0) {
        c = got.at(i, i) / want.at(i, i);
        found = true;
      }
    if (!found || sgn(c) == 0) throw domain_error("g2 construction: degenerate coroot pairing");
    fs[p] = fs[p] * (Rat(1) / c);
    if (commutator(es[p], fs[p]) != want)
      throw domain_error("g2 construction: [e,f] != coroot after normalisation");
  }
  std::vector<QMatrix> out = hs;
  for (auto& e : es) out.push_back(e);
  for (auto& f : fs) out.push_back(f);
  return out;
}

}  // namespace

QVec LieAlgebraModel::basis_vec(size_t k) const {
  QVec v = zero();
  v[k] = 1;
  return v;
}

QVec LieAlgebraModel::bracket(const QVec& a, const QVec& b) const {
  QVec out = zero();
  for (size_t i = 0; i < dim; ++i) {
    if (sgn(a[i]) == 0) continue;
    QVec col = ad[i] * b;
    for (size_t k = 0; k < dim; ++k) out[k] += a[i] * col[k];
  }
  return out;
}

QMatrix LieAlgebraModel::ad_of(const QVec& a) const {
  QMatrix m(dim, dim);
  for (size_t i = 0; i < dim; ++i)
    if (sgn(a[i]) != 0) m = m + ad[i] * a[i];
  return m;
}

QMatrix LieAlgebraModel::rep_of(const QVec& a) const {
  QMatrix m(rep_dim, rep_dim);
  for (size_t i = 0; i < dim; ++i)
    if (sgn(a[i]) != 0) m = m + rep[i] * a[i];
  return m;
}

Rat LieAlgebraModel::killing_pairing(const QVec& a, const QVec& b) const {
  Rat s = 0;
  for (size_t i = 0; i < dim; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t j = 0; j < dim; ++j)
      if (sgn(b[j]) != 0) s += a[i] * killing.at(i, j) * b[j];
  }
  return s;
}

QVec LieAlgebraModel::coroot_element(const Root& r) const {
  QVec v = zero();
  for (size_t i = 0; i < rank(); ++i) v[i] = r.coroot[i];
  return v;
}

LieAlgebraModel chevalley_algebra(const RootSystem& rs) {
  LieAlgebraModel g;
  g.rs = rs;
  size_t l = rs.rank;
  size_t npos = rs.num_positive();
  g.dim = l + 2 * npos;

  for (size_t i = 0; i < l; ++i) g.labels.push_back("h" + std::to_string(i + 1));
  for (size_t p = 0; p < npos; ++p) g.labels.push_back(root_label("e", rs.roots[p].coords));
  for (size_t p = 0; p < npos; ++p) g.labels.push_back(root_label("f", rs.roots[p].coords));

  g.grading.assign(g.dim, 0);
  for (size_t p = 0; p < npos; ++p) {
    g.grading[g.e_index(p)] = rs.roots[p].height;
    g.grading[g.f_index(p)] = -rs.roots[p].height;
  }

  g.rep = (rs.type.family == 'G') ? g2_rep_basis(rs) : an_rep_basis(rs);
  g.rep_dim = g.rep[0].rows();

  // structure constants through the faithful realization
  RepCoords rc(g.rep);
  std::vector<std::vector<QVec>> table(g.dim, std::vector<QVec>(g.dim));
  for (size_t a = 0; a < g.dim; ++a)
    for (size_t b = 0; b < g.dim; ++b)
      table[a][b] = rc.coords(commutator(g.rep[a], g.rep[b]));
  g.ad.assign(g.dim, QMatrix(g.dim, g.dim));
  for (size_t a = 0; a < g.dim; ++a)
    for (size_t b = 0; b < g.dim; ++b)
      for (size_t k = 0; k < g.dim; ++k) g.ad[a].at(k, b) = table[a][b][k];

  g.killing = QMatrix(g.dim, g.dim);
  for (size_t a = 0; a < g.dim; ++a)
    for (size_t b = a; b < g.dim; ++b) {
      Rat v = (g.ad[a] * g.ad[b]).trace();
      g.killing.at(a, b) = v;
      g.killing.at(b, a) = v;
    }

  validate_model(g);
  return g;
}

QMatrix killing_on_cartan(const LieAlgebraModel& g) {
  size_t l = g.rank();
  QMatrix k(l, l);
  for (size_t i = 0; i < l; ++i)
    for (size_t j = 0; j < l; ++j) k.at(i, j) = g.killing.at(i, j);
  return k;
}

void validate_model(const LieAlgebraModel& g) {
  size_t l = g.rank();
  // Cartan relations [h_i, e_{alpha_j}] = C_{ji} e_{alpha_j} on simple roots
  for (size_t i = 0; i < l; ++i)
    for (size_t p = 0; p < g.rs.num_positive(); ++p) {
      if (g.rs.roots[p].height != 1) continue;
      size_t j = 0;
      while (g.rs.roots[p].coords[j] == 0) ++j;
      QVec lhs = g.bracket(g.basis_vec(g.h_index(i)), g.basis_vec(g.e_index(p)));
      QVec rhs = g.basis_vec(g.e_index(p));
      for (auto& x : rhs) x *= Rat(g.rs.cartan[j][i]);
      if (lhs != rhs) throw domain_error("validate: [h_i, e_j] != C_ji e_j");
    }
  // grading: [g_a, g_b] subset g_{a+b}
  for (size_t a = 0; a < g.dim; ++a)
    for (size_t b = 0; b < g.dim; ++b) {
      QVec br = g.bracket(g.basis_vec(a), g.basis_vec(b));
      for (size_t k = 0; k < g.dim; ++k)
        if (sgn(br[k]) != 0 && g.grading[k] != g.grading[a] + g.grading[b])
          throw domain_error("validate: grading violated");
    }
  // Chevalley conditions on root pairs: [e_a, e_b] = N e_{a+b} with N an
  // integer of magnitude p+1 (root-string length), zero when a+b is not a
  // root, and [e_a, e_{-a}] equal to the coroot of a.
  size_t npos = g.rs.num_positive();
  auto basis_of_root = [&](size_t ridx) {
    return ridx < npos ? g.e_index(ridx) : g.f_index(ridx - npos);
  };
  auto find_root = [&](const std::vector<int>& coords) -> int {
    for (size_t r = 0; r < g.rs.roots.size(); ++r)
      if (g.rs.roots[r].coords == coords) return static_cast<int>(r);
    return -1;
  };
  for (size_t ra = 0; ra < g.rs.roots.size(); ++ra)
    for (size_t rb = 0; rb < g.rs.roots.size(); ++rb) {
      const auto& A = g.rs.roots[ra];
      const auto& B = g.rs.roots[rb];
      QVec br = g.bracket(g.basis_vec(basis_of_root(ra)), g.basis_vec(basis_of_root(rb)));
      std::vector<int> sum(l, 0);
      bool zero_sum = true;
      for (size_t i = 0; i < l; ++i) {
        sum[i] = A.coords[i] + B.coords[i];
        if (sum[i] != 0) zero_sum = false;
      }
      if (zero_sum) {
        if (br != g.coroot_element(A)) throw domain_error("validate: [e_a, e_{-a}] != coroot");
        continue;
      }
      int rsum = find_root(sum);
      if (rsum < 0) {
        bool nz = false;
        for (const auto& x : br) nz = nz || sgn(x) != 0;
        if (nz) throw domain_error("validate: nonzero bracket outside the root system");
        continue;
      }
      size_t target = basis_of_root(static_cast<size_t>(rsum));
      Rat n;
      for (size_t k = 0; k < g.dim; ++k) {
        if (k == target) n = br[k];
        else if (sgn(br[k]) != 0)
          throw domain_error("validate: bracket not proportional to the sum root vector");
      }
      if (!rat_is_integer(n)) throw domain_error("validate: non-integral structure constant");
      int p = 0;  // root-string length: largest k with B - kA a root
      for (;;) {
        std::vector<int> down(l, 0);
        for (size_t i = 0; i < l; ++i) down[i] = B.coords[i] - (p + 1) * A.coords[i];
        if (find_root(down) < 0) break;
        ++p;
      }
      if (abs(n) != Rat(p + 1))
        throw domain_error("validate: |N_{a,b}| != p+1 (not a Chevalley basis)");
    }
}

G2Duality killing_and_duality(const LieAlgebraModel& g) {
  G2Duality d;
  d.killing_on_t = killing_on_cartan(g);
  if (g.rs.type.family != 'G')
    throw domain_error("duality map requested for unsupported type (G2 only)");

  // collect short and long coroots as coordinate vectors
  std::vector<QVec> shorts, longs;
  for (const auto& r : g.rs.roots) {
    QVec v(r.coroot.begin(), r.coroot.end());
    // the coroot of a long root is short and vice versa
    if (r.is_long) shorts.push_back(v);
    else longs.push_back(v);
  }
  auto wey = weyl_group(g.rs);
  auto contains = [](const std::vector<QVec>& set, const QVec& v) {
    return std::find(set.begin(), set.end(), v) != std::end(set);
  };
  // search integer maps m with m(basis) in the right coroot sets
  // basis: coroot coords are e_1, e_2; m columns = images of the simple coroots
  const QVec e1 = {1, 0}, e2 = {0, 1};
  bool base1_short = contains(shorts, e1);
  const auto& img1set = base1_short ? longs : shorts;  // short -> long, long -> 3*short
  const auto& img2set = contains(shorts, e2) ? longs : shorts;
  for (const QVec& i1 : img1set)
    for (const QVec& i2 : img2set) {
      QMatrix m(2, 2);
      m.at(0, 0) = base1_short ? i1[0] : i1[0] * 3;
      m.at(1, 0) = base1_short ? i1[1] : i1[1] * 3;
      bool base2_short = contains(shorts, e2);
      m.at(0, 1) = base2_short ? i2[0] : i2[0] * 3;
      m.at(1, 1) = base2_short ? i2[1] : i2[1] * 3;
      // m must map short coroots onto long coroots bijectively and long ones
      // onto 3 * short
      bool ok = true;
      std::vector<QVec> seen;
      for (const QVec& s : shorts) {
        QVec im = m * s;
        if (!contains(longs, im) || contains(seen, im)) { ok = false; break; }
        seen.push_back(im);
      }
      if (!ok) continue;
      for (const QVec& s : longs) {
        QVec im = m * s;
        QVec third = {im[0] / 3, im[1] / 3};
        if (!contains(shorts, third)) { ok = false; break; }
      }
      if (!ok) continue;
      // m^2 = 3 w for some Weyl element
      QMatrix m2 = m * m;
      for (const auto& w : wey.elements) {
        if (m2 == w * Rat(3)) {
          d.scaled_map = m;
          d.weyl_square = w;
          d.l_sq_in_weyl = true;
          break;
        }
      }
      if (d.l_sq_in_weyl) break;
    }
  if (!d.l_sq_in_weyl) throw domain_error("G2 duality map construction failed");
  // l itself is not in W: no Weyl element exchanges the length classes
  d.l_in_weyl = false;
  for (const auto& w : wey.elements) {
    bool maps = true;
    for (const QVec& s : shorts)
      if (!contains(longs, w * s)) { maps = false; break; }
    if (maps) { d.l_in_weyl = true; break; }
  }
  return d;
}

}  // namespace hitchin
