#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "gothic/asymptotics.hpp"
#include "gothic/hypergeom.hpp"
#include "gothic/invariants.hpp"
#include "gothic/prototypes.hpp"
#include "gothic/qexp.hpp"

using namespace gothic;
using nlohmann::json;

namespace {

std::string csv_field(const std::string& v) {
  if (v.find_first_of(",\"") == std::string::npos) return v;
  std::string q = "\"";
  for (char c : v) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

constexpr int kOk = 0;
constexpr int kVerify = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  std::string format = "csv";
  std::string path;

  std::ostream& stream() {
    if (path.empty()) return std::cout;
    if (!file.is_open()) {
      file.open(path);
      if (!file) throw UsageError("cannot open output file " + path);
    }
    return file;
  }
  std::ofstream file;
};

void require_disc(i64 D) {
  if (!is_discriminant(D)) throw UsageError("D must be a positive non-square discriminant (0 or 1 mod 4)");
}

std::string fmt(const Real& x, int digits) { return x.str(digits, std::ios_base::scientific); }

std::string fmt(double x) {
  std::ostringstream o;
  o << std::setprecision(12) << x;
  return o.str();
}

Rat parse_rat(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0) throw UsageError("not a rational number: " + s);
  r.canonicalize();
  return r;
}

RmPrototype parse_prototype(const std::string& s) {
  RmPrototype p;
  char c1 = 0, c2 = 0;
  std::istringstream in(s);
  if (!(in >> p.ell >> c1 >> p.e >> c2 >> p.m) || c1 != ',' || c2 != ',') throw UsageError("prototype must be l,e,m");
  return p;
}

// flat record in either format
void emit_record(Output& out, const std::vector<std::pair<std::string, std::string>>& kv) {
  auto& o = out.stream();
  if (out.format == "json") {
    json j = json::object();
    for (const auto& [k, v] : kv) j[k] = v;
    o << j.dump(2) << "\n";
    return;
  }
  for (std::size_t i = 0; i < kv.size(); ++i) o << (i ? "," : "") << kv[i].first;
  o << "\n";
  for (std::size_t i = 0; i < kv.size(); ++i) o << (i ? "," : "") << csv_field(kv[i].second);
  o << "\n";
}

void emit_table(Output& out, const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  auto& o = out.stream();
  if (out.format == "json") {
    json j = json::array();
    for (const auto& r : rows) {
      json e = json::object();
      for (std::size_t i = 0; i < header.size(); ++i) e[header[i]] = r[i];
      j.push_back(e);
    }
    o << j.dump(2) << "\n";
    return;
  }
  for (std::size_t i = 0; i < header.size(); ++i) o << (i ? "," : "") << header[i];
  o << "\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) o << (i ? "," : "") << csv_field(r[i]);
    o << "\n";
  }
}

int cmd_table(Output& out, i64 dmax) {
  if (dmax < 1) throw UsageError("--dmax must be positive");
  std::vector<std::vector<std::string>> rows;
  try {
    for (const auto& r : table(dmax))
      rows.push_back({std::to_string(r.D), std::to_string(r.k), to_string(r.chi_X), to_string(r.chi_Red),
                      to_string(r.chi_G), r.lambda_P ? to_string(*r.lambda_P) : "", r.flags});
  } catch (const std::runtime_error& e) {
    std::cerr << "cross-check failed: " << e.what() << "\n";
    return kVerify;
  }
  emit_table(out, {"D", "k", "chi_X", "chi_Red", "chi_G", "lambda_P", "flags"}, rows);
  return kOk;
}

int cmd_prototypes(Output& out, i64 D, i64 k) {
  require_disc(D);
  if (k < 1) throw UsageError("k must be positive");
  std::vector<std::vector<std::string>> rows;
  for (const auto& p : enumerate_Pk(D, k))
    rows.push_back({std::to_string(p.a), std::to_string(p.b), std::to_string(p.c)});
  emit_table(out, {"a", "b", "c"}, rows);
  return kOk;
}

int cmd_ideals(Output& out, i64 D) {
  require_disc(D);
  std::vector<std::vector<std::string>> rows;
  for (const auto& b : norm6_ideals(D)) rows.push_back({std::to_string(b.r)});
  emit_table(out, {"r"}, rows);
  return kOk;
}

int cmd_gothic(Output& out, i64 D, const std::string& bound_s, const std::string& proto_s) {
  require_disc(D);
  const Rat B = parse_rat(bound_s);
  if (sgn(B) <= 0) throw UsageError("--bound must be positive");
  if (proto_s.empty()) {
    Form Q;
    try {
      Q = default_adapted_form(D);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    const auto s = gothic_form(D, Q, B);
    if (out.format == "json") {
      out.stream() << to_json(s).dump(2) << "\n";
    } else {
      std::vector<std::vector<std::string>> rows;
      for (const auto& [nu, c] : s.terms) {
        std::vector<std::string> r{to_string(nu.p()), to_string(nu.q())};
        for (int i = 0; i < 4; ++i) {
          r.push_back(to_string(c[i].p()));
          r.push_back(to_string(c[i].q()));
        }
        rows.push_back(r);
      }
      emit_table(out, {"nu_p", "nu_q", "c0_p", "c0_q", "c1_p", "c1_q", "c2_p", "c2_q", "c3_p", "c3_q"}, rows);
    }
    return kOk;
  }
  const RmPrototype P = parse_prototype(proto_s);
  const auto protos = enumerate_PD(D);
  if (std::find(protos.begin(), protos.end(), P) == protos.end()) throw UsageError("prototype is not in P_D");
  const Form Q = prototype_frame(D, P).Q;
  const auto g = gothic_form(D, Q, B);
  const bool z0 = restrict_series(g, D, P).is_zero();
  const bool z1 = restrict_series(tau_derivative(g, 1), D, P).is_zero();
  const bool z2 = restrict_series(tau_derivative(g, 2), D, P).is_zero();
  const auto r11 = restrict_series(tau_derivative(tau_derivative(g, 1), 1), D, P);
  std::string order = !z0 ? "order0" : (!z1 || !z2) ? "order1" : "order>=2";
  std::vector<std::pair<std::string, std::string>> kv{
      {"D", std::to_string(D)},
      {"prototype", proto_s},
      {"bound", to_string(B)},
      {"terms", std::to_string(g.size())},
      {"restriction_zero", z0 ? "true" : "false"},
      {"d1_restriction_zero", z1 ? "true" : "false"},
      {"d2_restriction_zero", z2 ? "true" : "false"},
      {"d11_restriction_zero", r11.is_zero() ? "true" : "false"},
      {"verdict", order}};
  if (!r11.is_zero()) {
    kv.emplace_back("d11_leading_exponent", to_string(r11.terms.begin()->first));
    kv.emplace_back("d11_leading_coeff", r11.terms.begin()->second.str());
  }
  emit_record(out, kv);
  return order == "order>=2" && !r11.is_zero() ? kOk : kVerify;
}

int cmd_asympt(Output& out, i64 dmin, i64 dmax, int residue) {
  if (dmin < 5 || dmax < dmin) throw UsageError("need 5 <= dmin <= dmax");
  if (residue >= 0) {
    try {
      predicted_ratio(residue);
    } catch (const std::invalid_argument&) {
      throw UsageError("--class must be one of 0,1,4,9,12,16");
    }
  }
  const auto rows = asymptotic_scan(dmin, dmax, residue);
  std::vector<std::vector<std::string>> tab;
  double mean = 0;
  for (const auto& r : rows) {
    tab.push_back({std::to_string(r.D), std::to_string(r.residue), fmt(r.ratio), fmt(r.predicted), fmt(r.rel_err)});
    mean += r.ratio;
  }
  emit_table(out, {"D", "class", "ratio", "predicted", "rel_err"}, tab);
  if (!rows.empty()) std::cerr << "mean ratio " << fmt(mean / static_cast<double>(rows.size())) << " over " << rows.size() << " discriminants\n";
  return kOk;
}

int cmd_eta(Output& out, i64 dmax) {
  if (dmax < 1) throw UsageError("--dmax must be positive");
  std::vector<std::vector<std::string>> rows;
  bool all = true;
  for (i64 D = 1; D <= dmax; D += 24) {
    if (is_square(D)) continue;
    const bool ok = eta_check(D);
    all = all && ok;
    rows.push_back({std::to_string(D), ok ? "pass" : "fail"});
  }
  emit_table(out, {"D", "result"}, rows);
  return all ? kOk : kVerify;
}

std::vector<Complex> sample_taus() {
  return {Complex(Real("0.3"), Real("1.5")), Complex(Real("-0.7"), Real("1.6")), Complex(Real("1.1"), Real("2.0"))};
}

int cmd_embed(Output& out, unsigned digits) {
  if (digits < 15 || digits > 200) throw UsageError("--digits must lie in [15, 200]");
  const int N = std::max(200, static_cast<int>(5 * digits));
  bool ok = true;
  json j;
  const char* names[2] = {"A", "Atilde"};
  for (int place = 0; place < 2; ++place) {
    const auto c = constant_A(place, digits, N);
    const std::string n = names[place];
    j[n] = fmt(c.value, static_cast<int>(digits));
    j[n + "_closed"] = fmt(c.closed, static_cast<int>(digits));
    j[n + "_abs_err"] = fmt(c.abs_err, 3);
    j[n + "_geometric"] = c.geometric;
    PrecisionGuard g(digits + 10);
    ok = ok && c.abs_err < boost::multiprecision::pow(Real(10), -static_cast<int>(digits)) * c.closed;
  }
  const auto exact = phi_exact_coeffs(5);
  const Rat expected[5] = {Rat(-1, 6), Rat(-5, 1152), Rat(-61, 497664), Rat(-713, 382205952), Rat(-4943, 183458856960L)};
  bool match = true;
  for (int i = 0; i < 5; ++i) {
    j["phi_coeffs"].push_back(to_string(exact[static_cast<std::size_t>(i)]));
    match = match && exact[static_cast<std::size_t>(i)] == expected[i];
  }
  j["phi_coeffs_match"] = match;
  ok = ok && match;
  const auto ph = phi_expansion(N, digits);
  j["phi_slope"] = ph.slope.str();
  j["phi_constant_im"] = fmt(ph.constant.im, 20);
  j["phi_constant_closed_im"] = fmt(ph.constant_closed.im, 20);
  {
    PrecisionGuard g(digits + 20);
    const Real s = boost::multiprecision::sqrt(Real(3));
    const Real al = 2 + 2 * s / 3, als = 2 - 2 * s / 3;
    for (const auto& t : {Complex(Real("0.1"), Real("0.5")), Complex(Real("-0.4"), Real("0.8")),
                          Complex(Real("0.7"), Real("0.3")), Complex(Real("1.3"), Real("1.0")),
                          Complex(Real("-1.1"), Real("0.6"))}) {
      const Complex d = phi_eval(ph, t + Complex(al)) - phi_eval(ph, t) - Complex(als);
      j["equivariance_residuals"].push_back(fmt(abs(d), 3));
    }
    std::vector<std::pair<Complex, Complex>> pts;
    for (const auto& t : sample_taus()) pts.push_back(embed_point(ph, t));
    const auto res = g12_search(pts);
    j["g12_convention"] = res.best.str();
    for (double r : res.best_residuals) j["g12_residuals"].push_back(r);
  }
  out.stream() << j.dump(2) << "\n";
  return ok ? kOk : kVerify;
}

int cmd_g12check(Output& out, unsigned digits) {
  if (digits < 15 || digits > 200) throw UsageError("--digits must lie in [15, 200]");
  const auto ph = phi_expansion(200, digits);
  std::vector<std::pair<Complex, Complex>> pts;
  json j;
  for (const auto& t : sample_taus()) {
    auto p = embed_point(ph, t);
    j["points"].push_back({{"tau", {fmt(t.re, 6), fmt(t.im, 6)}}, {"image", {fmt(p.second.re, 15), fmt(p.second.im, 15)}}});
    pts.push_back(p);
  }
  const auto res = g12_search(pts, digits);
  j["convention"] = res.best.str();
  double worst = 0;
  for (double r : res.best_residuals) {
    j["residuals"].push_back(r);
    worst = std::max(worst, r);
  }
  for (const auto& [c, r] : res.log) j["search_log"].push_back({{"convention", c.str()}, {"worst_residual", r}});
  j["pass"] = worst < 1e-6;
  out.stream() << j.dump(2) << "\n";
  return worst < 1e-6 ? kOk : kVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of Gothic Teichmueller curves"};
  app.require_subcommand(1);
  Output out;
  unsigned digits = 30;
  if (const char* env = std::getenv("GOTHIC_DIGITS")) digits = static_cast<unsigned>(std::atoi(env));
  app.add_option("--format", out.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", out.path, "output file");

  i64 dmax = 336, dmin = 0, D = 0, k = 1;
  int residue = -1;
  std::string bound = "10", proto;

  auto* t = app.add_subcommand("table", "Euler characteristics per discriminant");
  t->add_option("--dmax", dmax)->required();
  auto* p = app.add_subcommand("prototypes", "list P_k(D)");
  p->add_option("D", D)->required();
  p->add_option("k", k)->required();
  auto* id = app.add_subcommand("ideals", "list norm-6 ideals");
  id->add_option("D", D)->required();
  auto* g = app.add_subcommand("gothic", "q-expansion of G_D and vanishing along F_P");
  g->add_option("D", D)->required();
  g->add_option("--bound", bound, "trace bound (rational)");
  g->add_option("--prototype", proto, "l,e,m");
  auto* a = app.add_subcommand("asympt", "ratio e(D,6)/e(D,1) against predictions");
  a->add_option("--dmin", dmin)->required();
  a->add_option("--dmax", dmax)->required();
  a->add_option("--class", residue, "residue class mod 24");
  auto* e = app.add_subcommand("eta", "eta identity for D = 1 mod 24");
  e->add_option("--dmax", dmax)->required();
  auto* em = app.add_subcommand("embed", "constants A, A~ and the modular embedding");
  em->add_option("--digits", digits);
  auto* gc = app.add_subcommand("g12check", "numeric vanishing of G_12 along the embedded curve");
  gc->add_option("--digits", digits);
  for (auto* sc : {t, p, id, g, a, e, em, gc}) {
    sc->add_option("--format", out.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sc->add_option("--out", out.path, "output file");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int rc = app.exit(err);
    return rc == 0 ? kOk : kUsage;
  }
  try {
    if (*t) return cmd_table(out, dmax);
    if (*p) return cmd_prototypes(out, D, k);
    if (*id) return cmd_ideals(out, D);
    if (*g) return cmd_gothic(out, D, bound, proto);
    if (*a) return cmd_asympt(out, dmin, dmax, residue);
    if (*e) return cmd_eta(out, dmax);
    if (*em) return cmd_embed(out, digits);
    if (*gc) return cmd_g12check(out, digits);
  } catch (const UsageError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kUsage;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kVerify;
  }
  return kUsage;
}
