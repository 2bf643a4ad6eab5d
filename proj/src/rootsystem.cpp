#include "hitchin/rootsystem.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hitchin {

TypeTag parse_type(const std::string& s) {
  if (s == "G2" || s == "g2") return TypeTag{'G', 2};
  if ((s.size() >= 2) && (s[0] == 'A' || s[0] == 'a')) {
    int n = std::stoi(s.substr(1));
    // A6 keeps the full Weyl enumeration (|W| = 5040) comfortably in memory
    if (n >= 1 && n <= 6) return TypeTag{'A', n};
  }
  throw std::invalid_argument("unsupported type (expected A1..A6 or G2): " + s);
}

std::vector<std::vector<int>> cartan_matrix(const TypeTag& t) {
  if (t.family == 'G') return {{2, -1}, {-3, 2}};
  int n = t.rank;
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    c[i][i] = 2;
    if (i + 1 < n) c[i][i + 1] = c[i + 1][i] = -1;
  }
  return c;
}

std::vector<std::vector<int>> g2_transpose_convention(const std::vector<std::vector<int>>& c) {
  std::vector<std::vector<int>> t(c.size(), std::vector<int>(c.size()));
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < c.size(); ++j) t[j][i] = c[i][j];
  return t;
}

namespace {

TypeTag classify_cartan(const std::vector<std::vector<int>>& c) {
  size_t n = c.size();
  if (n == 0) throw std::invalid_argument("empty Cartan matrix");
  for (const auto& row : c)
    if (row.size() != n) throw std::invalid_argument("non-square Cartan matrix");
  for (size_t i = 0; i < n; ++i) {
    if (c[i][i] != 2) throw std::invalid_argument("non-Cartan matrix: diagonal must be 2");
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (c[i][j] > 0) throw std::invalid_argument("non-Cartan matrix: positive off-diagonal");
      if ((c[i][j] == 0) != (c[j][i] == 0))
        throw std::invalid_argument("non-Cartan matrix: asymmetric zero pattern");
    }
  }
  if (c == cartan_matrix(TypeTag{'G', 2})) return TypeTag{'G', 2};
  TypeTag a{'A', static_cast<int>(n)};
  if (c == cartan_matrix(a)) return a;
  throw std::invalid_argument("unsupported Cartan matrix (not A_n standard or G2 pinned form)");
}

// Length^2 of simple roots, normalised so short = 2: solve C_ij L_j = C_ji L_i.
std::vector<Rat> simple_lengths(const std::vector<std::vector<int>>& c) {
  size_t n = c.size();
  std::vector<Rat> L(n, Rat(0));
  L[0] = 1;
  // propagate along the (connected) Dynkin graph
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        if (i == j || c[i][j] == 0) continue;
        if (sgn(L[i]) != 0 && sgn(L[j]) == 0) {
          L[j] = L[i] * Rat(c[j][i]) / Rat(c[i][j]);
          changed = true;
        }
      }
  }
  Rat mn = L[0];
  for (const auto& x : L)
    if (x < mn) mn = x;
  for (auto& x : L) x = x * 2 / mn;
  return L;
}

}  // namespace

size_t RootSystem::weyl_order_from_exponents() const {
  size_t o = 1;
  for (int m : exponents) o *= static_cast<size_t>(m + 1);
  return o;
}

RootSystem build_root_system(const std::vector<std::vector<int>>& cartan) {
  RootSystem rs;
  rs.type = classify_cartan(cartan);
  rs.cartan = cartan;
  rs.rank = static_cast<int>(cartan.size());
  int n = rs.rank;
  auto L = simple_lengths(cartan);

  // reflection closure on simple-root coordinates:
  // s_i(c) = c - (sum_j C_ji c_j) e_i
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto cur = queue.back();
    queue.pop_back();
    for (int i = 0; i < n; ++i) {
      int pairing = 0;
      for (int j = 0; j < n; ++j) pairing += cartan[j][i] * cur[j];
      std::vector<int> img = cur;
      img[i] -= pairing;
      if (seen.insert(img).second) queue.push_back(img);
    }
    std::vector<int> neg = cur;
    for (auto& x : neg) x = -x;
    if (seen.insert(neg).second) queue.push_back(neg);
  }

  std::vector<std::vector<int>> pos;
  for (const auto& r : seen) {
    int h = 0;
    bool nonneg = true;
    for (int x : r) {
      h += x;
      if (x < 0) nonneg = false;
    }
    if (nonneg && h > 0) pos.push_back(r);
  }
  std::sort(pos.begin(), pos.end(), [](const auto& a, const auto& b) {
    int ha = 0, hb = 0;
    for (int x : a) ha += x;
    for (int x : b) hb += x;
    if (ha != hb) return ha < hb;
    return a < b;
  });

  Rat maxlen = 0;
  auto make_root = [&](const std::vector<int>& coords) {
    Root r;
    r.coords = coords;
    r.height = 0;
    for (int x : coords) r.height += x;
    Rat lsq = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        lsq += Rat(coords[i]) * Rat(coords[j]) * Rat(cartan[i][j]) * L[j] / 2;
    r.length_sq = lsq;
    r.coroot.assign(n, Rat(0));
    for (int i = 0; i < n; ++i) r.coroot[i] = Rat(coords[i]) * L[i] / lsq;
    return r;
  };
  for (const auto& p : pos) {
    Root r = make_root(p);
    if (r.length_sq > maxlen) maxlen = r.length_sq;
    rs.roots.push_back(r);
  }
  for (const auto& p : pos) {
    std::vector<int> m = p;
    for (auto& x : m) x = -x;
    rs.roots.push_back(make_root(m));
  }
  for (auto& r : rs.roots) r.is_long = (r.length_sq == maxlen);

  // exponents from the height distribution: #(positive roots of height h)
  // equals #{i : m_i >= h}
  std::map<int, int> by_height;
  int max_h = 0;
  for (const auto& p : pos) {
    int h = 0;
    for (int x : p) h += x;
    by_height[h]++;
    max_h = std::max(max_h, h);
  }
  std::vector<int> counts;
  for (int h = 1; h <= max_h; ++h) counts.push_back(by_height.count(h) ? by_height[h] : 0);
  rs.exponents.clear();
  for (int i = n; i >= 1; --i) {
    int m = 0;
    for (int h = 1; h <= max_h; ++h)
      if (counts[h - 1] >= i) m = h;
    rs.exponents.push_back(m);
  }
  std::sort(rs.exponents.begin(), rs.exponents.end());
  rs.highest_height = max_h;
  if (rs.exponents.back() != max_h)
    throw domain_error("root system internal check failed: M != m_l");
  return rs;
}

RootSystem build_root_system(const TypeTag& t) { return build_root_system(cartan_matrix(t)); }

WeylGroup weyl_group(const RootSystem& rs, size_t safety_bound) {
  int n = rs.rank;
  WeylGroup w;
  for (int i = 0; i < n; ++i) {
    // action on coroot coordinates: s_i(v)_k = v_k - delta_{ki} sum_j C_ij v_j
    QMatrix s = QMatrix::identity(n);
    for (int j = 0; j < n; ++j) s.at(i, j) -= Rat(rs.cartan[i][j]);
    w.generators.push_back(s);
  }
  std::vector<QMatrix> elems = {QMatrix::identity(n)};
  std::set<std::vector<std::string>> seen;
  auto key = [&](const QMatrix& m) {
    std::vector<std::string> k;
    for (size_t i = 0; i < m.rows(); ++i)
      for (size_t j = 0; j < m.cols(); ++j) k.push_back(rat_to_string(m.at(i, j)));
    return k;
  };
  seen.insert(key(elems[0]));
  for (size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : w.generators) {
      QMatrix prod = g * elems[head];
      if (seen.insert(key(prod)).second) {
        elems.push_back(prod);
        if (elems.size() > safety_bound)
          throw domain_error("Weyl closure exceeded safety bound (invalid input?)");
      }
    }
  }
  w.elements = std::move(elems);
  return w;
}

bool is_dihedral_of_order(const WeylGroup& w, size_t n) {
  if (w.order() != n || n % 2 != 0) return false;
  if (w.generators.size() != 2) return false;
  auto order_of = [&](const QMatrix& m) {
    QMatrix p = m;
    size_t k = 1;
    QMatrix id = QMatrix::identity(m.rows());
    while (p != id && k <= n) {
      p = p * m;
      ++k;
    }
    return k;
  };
  const auto& a = w.generators[0];
  const auto& b = w.generators[1];
  return order_of(a) == 2 && order_of(b) == 2 && order_of(a * b) == n / 2;
}

}  // namespace hitchin
