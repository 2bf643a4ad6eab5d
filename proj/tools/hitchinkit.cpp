// hitchinkit: exact spectral-cover, Kostant-section and special-Kahler
// calculations from the command line. One subcommand per module; --json
// switches the report to machine-readable form.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "hitchin/cubic.hpp"
#include "hitchin/g2base.hpp"
#include "hitchin/periods.hpp"
#include "hitchin/principal.hpp"
#include "hitchin/quotient.hpp"
#include "hitchin/report.hpp"
#include "hitchin/skchart.hpp"
#include "hitchin/spectral.hpp"

namespace {

using namespace hitchin;

std::string element_str(const LieAlgebraModel& g, const QVec& v) {
  std::string out;
  for (size_t i = 0; i < g.dim; ++i) {
    if (sgn(v[i]) == 0) continue;
    Rat c = v[i];
    if (out.empty()) {
      if (sgn(c) < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
      c = abs(c);
    }
    if (c != 1) out += rat_to_string(c) + "*";
    out += g.labels[i];
  }
  return out.empty() ? "0" : out;
}

Json element_json(const LieAlgebraModel& g, const QVec& v) {
  Json j = Json::object();
  for (size_t i = 0; i < g.dim; ++i)
    if (sgn(v[i]) != 0) j[g.labels[i]] = rat_to_string(v[i]);
  return j;
}

std::vector<Rat> parse_point(const std::string& s) {
  std::vector<Rat> out;
  std::string cur;
  for (char ch : s + ",") {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(rat_from_string(cur));
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  return out;
}

void emit(const Report& r, bool json) {
  if (json) std::cout << r.to_json().dump(2) << "\n";
  else std::cout << r.text();
}

// ----------------------------------------------------------------- rootsys

int run_rootsys(const std::string& type, bool json) {
  auto rs = build_root_system(parse_type(type));
  auto w = weyl_group(rs);
  auto g = chevalley_algebra(rs);

  Report rep;
  rep.subcommand = "rootsys";
  rep.inputs["type"] = rs.type.str();
  Json roots = Json::array();
  for (const auto& r : rs.roots) {
    Json j;
    j["coords"] = r.coords;
    j["height"] = r.height;
    j["length"] = r.is_long ? "long" : "short";
    roots.push_back(j);
  }
  rep.results["roots"] = roots;
  rep.results["num_roots"] = rs.roots.size();
  rep.results["rank"] = rs.rank;
  rep.results["dim_g"] = rs.roots.size() + rs.rank;
  rep.results["exponents"] = rs.exponents;
  rep.results["weyl_order"] = w.order();
  rep.results["highest_root_height"] = rs.highest_height;
  // conventions for the Coxeter number differ by one from the highest root
  // height, so both are reported
  rep.results["coxeter_number"] = rs.highest_height + 1;
  Json grading = Json::object();
  std::map<int, int> dims;
  for (int h : g.grading) dims[h]++;
  for (const auto& [h, n] : dims) grading[std::to_string(h)] = n;
  rep.results["grading_dims"] = grading;
  emit(rep, json);
  return 0;
}

// ---------------------------------------------------------------- principal

int run_principal(const std::string& type, bool verify, bool json) {
  auto g = chevalley_algebra(parse_type(type));
  auto t = principal_triple(unit_epinglage(g));
  auto dec = ad_decomposition(t);
  auto sp = splitting_map(t);

  Report rep;
  rep.subcommand = "principal";
  rep.inputs["type"] = g.rs.type.str();
  rep.results["x"] = element_str(g, t.x);
  rep.results["h"] = element_str(g, t.h);
  rep.results["y"] = element_str(g, t.y);
  Json kac = Json::array();
  for (const auto& r : t.kac_labels) kac.push_back(rat_to_string(r));
  rep.results["kac_labels"] = kac;
  rep.results["exponents"] = dec.exponents;
  Json iso = Json::array();
  for (const auto& [m, d] : dec.isotypic) iso.push_back(Json{{"m", m}, {"dim", d}});
  rep.results["isotypic"] = iso;
  Json pimg = Json::array();
  for (const auto& wv : sp.image_ad_y) {
    Json j;
    j["w"] = element_str(g, wv);
    j["P(w)"] = element_str(g, sp.apply(wv));
    pimg.push_back(j);
  }
  rep.results["splitting_on_basis"] = pimg;
  if (verify) {
    Json checks = Json::object();
    checks["triple_relations"] = "ok";  // construction throws otherwise
    size_t total = 0;
    for (const auto& [m, d] : dec.isotypic) total += d;
    checks["sum_2m_plus_1_equals_dim"] = (total == g.dim);
    checks["ker_ad_y_dim_equals_rank"] = (dec.lowest.size() == g.rank());
    QMatrix ady = g.ad_of(t.y);
    bool split_ok = true;
    for (const auto& wv : sp.image_ad_y) split_ok = split_ok && (ady * sp.apply(wv) == wv);
    checks["ad_y_after_P_is_identity"] = split_ok;
    rep.results["verify"] = checks;
  }
  emit(rep, json);
  return 0;
}

// ------------------------------------------------------------------ kostant

int run_kostant(const std::string& type, const std::string& point, bool verify, bool json) {
  auto g = chevalley_algebra(parse_type(type));
  auto ks = kostant_section_data(g);
  auto b = parse_point(point);
  if (b.size() != g.rank())
    throw std::invalid_argument("expected " + std::to_string(g.rank()) + " coordinates");
  QVec el = ks.at(b);

  Report rep;
  rep.subcommand = "kostant";
  rep.inputs["type"] = g.rs.type.str();
  rep.inputs["point"] = point;
  rep.results["section"] = element_str(g, el);
  rep.results["section_coeffs"] = element_json(g, el);
  if (g.rs.type.family == 'A') {
    // matrix form in the defining representation
    QMatrix m = g.rep_of(el);
    Json rows = Json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
      Json row = Json::array();
      for (size_t j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m.at(i, j)));
      rows.push_back(row);
    }
    rep.results["matrix"] = rows;
  }
  Json chi = Json::array();
  for (const auto& v : adjoint_quotient(g, el)) chi.push_back(rat_to_string(v));
  rep.results["chi"] = chi;
  Json scal = Json::array();
  for (const auto& s : ks.scalings) scal.push_back(rat_to_string(s));
  rep.results["normalisation_scalings"] = scal;
  if (verify) {
    Json checks = Json::object();
    auto back = adjoint_quotient(g, el);
    bool id = true;
    for (size_t i = 0; i < b.size(); ++i) id = id && (back[i] == b[i]);
    checks["chi_of_section_equals_point"] = id;
    checks["regular"] = (g.ad_of(el).kernel().size() == g.rank());
    SplitMix64 rng(seed_from_env());
    bool reg_sampled = true;
    for (int s = 0; s < 20; ++s) {
      std::vector<Rat> rb;
      for (size_t i = 0; i < g.rank(); ++i) rb.push_back(rng.next_rat());
      reg_sampled = reg_sampled && (g.ad_of(ks.at(rb)).kernel().size() == g.rank());
    }
    checks["regular_at_20_sampled_points"] = reg_sampled;
    rep.results["verify"] = checks;
  }
  emit(rep, json);
  return 0;
}

// --------------------------------------------------------------------- chi

int run_chi(const std::string& type, const std::string& file, bool json) {
  auto g = chevalley_algebra(parse_type(type));
  std::ifstream in(file);
  if (!in) throw std::invalid_argument("cannot open element file: " + file);
  Json j;
  in >> j;
  QVec x = g.zero();
  const auto& coeffs = j.at("coeffs");
  if (coeffs.is_array()) {
    auto vals = coeffs.get<std::vector<std::string>>();
    if (vals.size() != g.dim) throw std::invalid_argument("coeffs: wrong length");
    for (size_t i = 0; i < g.dim; ++i) x[i] = rat_from_string(vals[i]);
  } else {
    for (auto it = coeffs.begin(); it != coeffs.end(); ++it) {
      auto pos = std::find(g.labels.begin(), g.labels.end(), it.key());
      if (pos == g.labels.end()) throw std::invalid_argument("unknown basis label " + it.key());
      x[static_cast<size_t>(pos - g.labels.begin())] =
          rat_from_string(it.value().get<std::string>());
    }
  }
  Report rep;
  rep.subcommand = "chi";
  rep.inputs["type"] = g.rs.type.str();
  rep.inputs["element"] = element_json(g, x);
  Json chi = Json::array();
  for (const auto& v : adjoint_quotient(g, x)) chi.push_back(rat_to_string(v));
  rep.results["chi"] = chi;
  rep.results["regular"] = (g.ad_of(x).kernel().size() == g.rank());
  emit(rep, json);
  return 0;
}

// ---------------------------------------------------------------- spectral

int run_spectral(const std::string& file, bool loci, bool json) {
  std::ifstream in(file);
  if (!in) throw std::invalid_argument("cannot open family file: " + file);
  Json j;
  in >> j;
  MatrixFamily fam;
  fam.base_vars = j.at("vars").get<std::vector<std::string>>();
  for (const auto& row : j.at("matrix")) {
    std::vector<Poly> r;
    for (const auto& cell : row) r.push_back(Poly::parse(cell.get<std::string>(), fam.base_vars));
    fam.entries.push_back(std::move(r));
  }
  if (j.contains("trace_free")) fam.trace_free = j.at("trace_free").get<bool>();
  auto eq = spectral_equation(fam);

  Report rep;
  rep.subcommand = "spectral";
  rep.inputs["family"] = j;
  rep.results["spectral_equation"] = eq.p.str();
  Json cs = Json::array();
  for (const auto& c : eq.coeffs) cs.push_back(c.str());
  rep.results["coefficients"] = cs;
  if (loci) {
    auto lr = branch_and_singular(fam);
    rep.results["branch"] = lr.branch.str();
    Json ram = Json::array(), sing = Json::array();
    for (const auto& p : lr.ramification) ram.push_back(p.str());
    for (const auto& p : lr.singular) sing.push_back(p.str());
    rep.results["ramification_ideal"] = ram;
    rep.results["singular_ideal"] = sing;
  }
  emit(rep, json);
  return 0;
}

// -------------------------------------------------------------- numerology

int run_numerology(const std::string& group, int n, int genus, int twist, long line_degree,
                   bool has_d, bool json) {
  auto r = numerology(group, n, genus, twist, has_d ? &line_degree : nullptr);
  Report rep;
  rep.subcommand = "numerology";
  rep.inputs["group"] = group;
  rep.inputs["n"] = n;
  rep.inputs["genus"] = genus;
  rep.inputs["twist"] = twist;
  rep.results["dim_base_gl"] = r.dim_base_gl;
  rep.results["dim_base_sl"] = r.dim_base_sl;
  rep.results["spectral_genus"] = r.spectral_genus;
  rep.results["sl2_cameral_genus"] = r.sl2_cameral_genus;
  rep.results["deg_det_push_structure_sheaf"] = r.deg_det_push_o;
  if (r.has_line_degree) {
    rep.inputs["line_degree"] = r.line_degree;
    rep.results["deg_pushforward_line_bundle"] = r.deg_push_l;
  }
  rep.results["moduli_dim"] = r.moduli_dim;
  rep.warnings = r.warnings;
  emit(rep, json);
  return 0;
}

// ---------------------------------------------------------------------- g2

int run_g2_involution(const std::string& fs, const std::string& qs, bool json) {
  std::vector<std::string> vars = {"f", "q"};
  Poly f = Poly::parse(fs, vars);
  Poly q = Poly::parse(qs, vars);
  auto p = g2_base_point(f, q);
  auto img = langlands_involution(p);
  auto img2 = langlands_involution(img);
  auto disc = g2_discriminant(p);

  Report rep;
  rep.subcommand = "g2-involution";
  rep.inputs["f"] = fs;
  rep.inputs["q"] = qs;
  rep.results["image"] = Json::array({img.f.str(), img.q.str()});
  rep.results["involution_squared_is_identity"] = (img2.f == p.f && img2.q == p.q);
  rep.results["discriminant"] = disc.value.str();
  rep.results["discriminant_short_factor"] = disc.short_factor.str();
  rep.results["discriminant_long_factor"] = disc.long_factor.str();
  emit(rep, json);
  return 0;
}

int run_g2_dims(int genus, int delta, bool json) {
  auto t = g2_dimension_table(genus, delta);
  Report rep;
  rep.subcommand = "g2-dims";
  rep.inputs["genus"] = genus;
  rep.inputs["delta"] = delta;
  rep.results["dim_base"] = t.dim_base;
  rep.results["dim_higgs0"] = t.dim_higgs0;
  rep.results["dim_b0"] = t.dim_b0;
  rep.results["dim_leaf_space"] = t.dim_leaf_space;
  rep.warnings = t.warnings;
  emit(rep, json);
  return 0;
}

int run_g2_cameral(const std::string& f0s, const std::string& q0s, bool json) {
  Rat f0 = rat_from_string(f0s), q0 = rat_from_string(q0s);
  auto s = cameral_equations(f0, q0);
  Report rep;
  rep.subcommand = "g2-cameral";
  rep.inputs["f0"] = f0s;
  rep.inputs["q0"] = q0s;
  rep.results["system_invariant"] =
      Json::array({s.system_invariant[0].str() + " = 0", s.system_invariant[1].str() + " = 0"});
  rep.results["system_hitchin"] =
      Json::array({s.system_hitchin[0].str() + " = 0", s.system_hitchin[1].str() + " = 0"});
  Json chg = Json::array();
  for (const auto& row : s.change) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(e.str());
    chg.push_back(r);
  }
  rep.results["change_of_coordinates"] = chg;
  rep.results["change_of_coordinates_note"] =
      "entries over Q[r3] with r3^2 = 3; (x,y)_invariant = change * (x,y)_hitchin";
  rep.results["bezout_degree"] = s.bezout_degree;
  emit(rep, json);
  return 0;
}

// -------------------------------------------------------------------- cubic

int run_cubic_sl2(const std::string& bs, int delta, const std::string& xis,
                  const std::string& etas, const std::string& zetas, bool oracle, double step,
                  bool json) {
  std::vector<std::string> uv = {"u"};
  Poly b = Poly::parse(bs, uv);
  auto data = sl2_cameral(delta, b);
  Poly xi = Poly::parse(xis, uv);
  Poly eta = etas.empty() ? xi : Poly::parse(etas, uv);
  Poly zeta = zetas.empty() ? xi : Poly::parse(zetas, uv);
  Rat value = dm_cubic_sl2(data, xi, eta, zeta);

  Report rep;
  rep.subcommand = "cubic-sl2";
  rep.inputs["b"] = bs;
  rep.inputs["delta"] = delta;
  rep.inputs["xi"] = xi.str();
  rep.inputs["eta"] = eta.str();
  rep.inputs["zeta"] = zeta.str();
  rep.results["value"] = rat_to_string(value);
  Json ramj = Json::array();
  Json resj = Json::array();
  DiffExpr integrand = dm_cubic_integrand(data, xi, eta, zeta);
  for (const auto& r : data.ram) {
    ramj.push_back(rat_to_string(r));
    // each call re-checks invariance under rescaling the adapted coordinate
    resj.push_back(rat_to_string(quadratic_residue(data.cameral, integrand,
                                                   CurvePoint::branch(r))));
  }
  rep.results["ramification"] = ramj;
  rep.results["quadratic_residues"] = resj;
  rep.results["rescaling_selftest"] = "ok";
  rep.results["cameral_genus"] = data.cameral.genus();
  rep.results["leaf_dim"] = data.leaf_dim;
  if (oracle) {
    if (delta != 4) throw domain_error("--oracle requires the elliptic instance (delta = 4)");
    auto po = period_oracle(b, xi, step);
    auto oc = oracle_cubic(po);
    std::complex<double> cal(0, 0);
    double denom = std::norm(oc);
    if (denom > 0) {
      std::complex<double> vc(rat_to_double(value), 0);
      cal = vc / oc;
    }
    Json oj;
    oj["float_format"] = kFloatFormat;
    oj["tau0"] = Json::array({fmt_double(po.tau0.real()), fmt_double(po.tau0.imag())});
    oj["im_tau_positive"] = po.im_tau_positive;
    oj["dtau_dt"] = Json::array({fmt_double(po.dtau.real()), fmt_double(po.dtau.imag())});
    oj["error_estimate"] = fmt_double(po.error_estimate);
    oj["oracle_cubic"] = Json::array({fmt_double(oc.real()), fmt_double(oc.imag())});
    oj["calibration"] = Json::array({fmt_double(cal.real()), fmt_double(cal.imag())});
    rep.results["oracle"] = oj;
  }
  emit(rep, json);
  return 0;
}

// ----------------------------------------------------------------------- sk

std::vector<std::string> scan_vars(const std::string& expr) {
  std::vector<std::string> vars;
  std::string cur;
  for (size_t i = 0; i <= expr.size(); ++i) {
    char ch = i < expr.size() ? expr[i] : '\0';
    if (std::isalpha(static_cast<unsigned char>(ch)) ||
        (!cur.empty() && (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'))) {
      cur += ch;
    } else {
      if (!cur.empty() && std::find(vars.begin(), vars.end(), cur) == vars.end())
        vars.push_back(cur);
      cur.clear();
    }
  }
  return vars;
}

int run_sk(const std::string& prep, const std::string& vars_opt, const std::string& sample,
           bool json) {
  std::vector<std::string> zv;
  if (!vars_opt.empty()) {
    for (const auto& v : scan_vars(vars_opt)) zv.push_back(v);
  } else {
    zv = scan_vars(prep);
  }
  if (zv.empty()) zv = {"z"};
  Poly f = Poly::parse(prep, zv);
  auto chart = from_prepotential(make_prepotential(f));

  Report rep;
  rep.subcommand = "sk";
  rep.inputs["prepotential"] = prep;
  rep.inputs["vars"] = zv;
  Json dual = Json::array();
  for (const auto& w : chart.dual) dual.push_back(w.str());
  rep.results["dual_coordinates"] = dual;
  Json tau = Json::array();
  for (const auto& row : chart.tau) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(e.str());
    tau.push_back(r);
  }
  rep.results["tau"] = tau;
  Json cj = Json::array();
  size_t n = chart.n();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j)
      for (size_t k = j; k < n; ++k) {
        if (chart.cubic[i][j][k].is_zero()) continue;
        Json e;
        e["ijk"] = Json::array({i + 1, j + 1, k + 1});
        e["value"] = chart.cubic[i][j][k].str();
        cj.push_back(e);
      }
  rep.results["cubic"] = cj;
  rep.results["kahler_potential"] = chart.kahler_potential;
  if (!sample.empty()) {
    std::vector<std::vector<QComplex>> pts;
    std::string cur;
    for (char ch : sample + ";") {
      if (ch == ';') {
        if (!cur.empty()) pts.push_back(parse_complex_tuple(cur, n));
        cur.clear();
      } else {
        cur += ch;
      }
    }
    auto res = positivity_sample(chart, pts);
    Json pj = Json::array();
    for (const auto& r : res) {
      Json e;
      Json pt = Json::array();
      for (const auto& z : r.point)
        pt.push_back(rat_to_string(z.re) + (sgn(z.im) >= 0 ? "+" : "") + rat_to_string(z.im) + "i");
      e["point"] = pt;
      e["classification"] = r.classification;
      e["min_eigenvalue_im_tau"] = fmt_double(r.min_eigenvalue);
      e["float_format"] = kFloatFormat;
      pj.push_back(e);
    }
    rep.results["positivity"] = pj;
  }
  emit(rep, json);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hitchinkit: exact Hitchin-system desk calculations"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output (global)");

  std::string type = "A1", point = "0", file, fs = "f", qs = "q";
  bool verify = false, loci = false;

  auto* rootsys = app.add_subcommand("rootsys", "root system data from a Cartan type");
  rootsys->add_option("--type", type, "A1..A6 or G2")->required();
  rootsys->add_flag("--json", json, "machine-readable output");

  auto* principal = app.add_subcommand("principal", "principal sl2 triple and splitting");
  principal->add_option("--type", type)->required();
  principal->add_flag("--verify", verify, "run the exact checks and report them");
  principal->add_flag("--json", json);

  auto* kostant = app.add_subcommand("kostant", "Kostant section at a base point");
  kostant->add_option("--type", type)->required();
  kostant->add_option("--point", point, "comma-separated rationals")->required();
  kostant->add_flag("--verify", verify);
  kostant->add_flag("--json", json);

  auto* chi = app.add_subcommand("chi", "adjoint quotient of an element");
  chi->add_option("--type", type)->required();
  chi->add_option("--element", file, "JSON file with {\"coeffs\": {...}}")->required();
  chi->add_flag("--json", json);

  auto* spectral = app.add_subcommand("spectral", "spectral cover of a matrix family");
  spectral->add_option("--family", file, "JSON family file")->required();
  spectral->add_flag("--loci", loci, "emit branch/ramification/singular loci");
  spectral->add_flag("--json", json);

  std::string group = "GL";
  int n = 2, genus = 2, twist = 0;
  long line_degree = 0;
  auto* numerology = app.add_subcommand("numerology", "dimension and degree bookkeeping");
  numerology->add_option("--group", group, "GL or SL");
  numerology->add_option("--n", n)->required();
  numerology->add_option("--genus", genus)->required();
  numerology->add_option("--twist", twist);
  auto* dopt = numerology->add_option("--line-degree", line_degree, "deg L on the cover");
  numerology->add_flag("--json", json);

  auto* g2 = app.add_subcommand("g2", "G2 base: involution, dims, cameral equations");
  g2->require_subcommand(1);
  auto* g2inv = g2->add_subcommand("involution", "the Langlands involution on (f, q)");
  g2inv->add_option("--f", fs)->required();
  g2inv->add_option("--q", qs)->required();
  g2inv->add_flag("--json", json);
  int g2_genus = 2, g2_delta = 0;
  auto* g2dims = g2->add_subcommand("dims", "twisted dimension table");
  g2dims->add_option("--genus", g2_genus)->required();
  g2dims->add_option("--delta", g2_delta)->required();
  g2dims->add_flag("--json", json);
  std::string f0 = "1", q0 = "0";
  auto* g2cam = g2->add_subcommand("cameral", "the two cameral equation systems");
  g2cam->add_option("--f0", f0)->required();
  g2cam->add_option("--q0", q0)->required();
  g2cam->add_flag("--json", json);

  auto* cubic = app.add_subcommand("cubic", "Donagi-Markman cubic");
  cubic->require_subcommand(1);
  auto* cubicsl2 = cubic->add_subcommand("sl2", "SL2 residue cubic over the rational base");
  std::string bs, xis = "1", etas, zetas;
  int delta = 4;
  bool oracle = false;
  double step = 1e-4;
  cubicsl2->add_option("--b", bs, "section of L^2 with simple rational zeros")->required();
  cubicsl2->add_option("--delta", delta)->required();
  cubicsl2->add_option("--xi", xis, "leaf direction (poly of degree <= delta-4)");
  cubicsl2->add_option("--eta", etas);
  cubicsl2->add_option("--zeta", zetas);
  cubicsl2->add_flag("--oracle", oracle, "run the numerical period oracle");
  cubicsl2->add_option("--step", step, "finite-difference step");
  cubicsl2->add_flag("--json", json);

  auto* sk = app.add_subcommand("sk", "special-Kahler chart from a prepotential");
  std::string prep, sample, skvars;
  sk->add_option("--prepotential", prep)->required();
  sk->add_option("--vars", skvars, "comma-separated variable list (default: scanned)");
  sk->add_option("--sample", sample, "semicolon-separated complex tuples");
  sk->add_flag("--json", json);

  try {
    app.parse(argc, argv);
    if (rootsys->parsed()) return run_rootsys(type, json);
    if (principal->parsed()) return run_principal(type, verify, json);
    if (kostant->parsed()) return run_kostant(type, point, verify, json);
    if (chi->parsed()) return run_chi(type, file, json);
    if (spectral->parsed()) return run_spectral(file, loci, json);
    if (numerology->parsed())
      return run_numerology(group, n, genus, twist, line_degree, dopt->count() > 0, json);
    if (g2->parsed()) {
      if (g2inv->parsed()) return run_g2_involution(fs, qs, json);
      if (g2dims->parsed()) return run_g2_dims(g2_genus, g2_delta, json);
      if (g2cam->parsed()) return run_g2_cameral(f0, q0, json);
    }
    if (cubic->parsed() && cubicsl2->parsed())
      return run_cubic_sl2(bs, delta, xis, etas, zetas, oracle, step, json);
    if (sk->parsed()) return run_sk(prep, skvars, sample, json);
    std::cerr << "unknown subcommand\n";
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const hitchin::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
