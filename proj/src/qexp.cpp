#include "gothic/qexp.hpp"

#include <cmath>
#include <stdexcept>

namespace gothic {

// ---- CycQuad ----

CycQuad CycQuad::zeta_pow(int k) {
  k = ((k % 12) + 12) % 12;
  const bool neg = k >= 6;
  if (neg) k -= 6;
  CycQuad z;
  const QuadElem one = QuadElem::rational(1);
  if (k < 4) {
    z[k] = one;
  } else if (k == 4) {  // zeta^4 = zeta^2 - 1
    z[2] = one;
    z[0] = -one;
  } else {  // zeta^5 = zeta^3 - zeta
    z[3] = one;
    z[1] = -one;
  }
  return neg ? -z : z;
}

bool CycQuad::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

CycQuad& CycQuad::operator+=(const CycQuad& o) {
  for (int r = 0; r < 4; ++r) (*this)[r] += o[r];
  return *this;
}

CycQuad& CycQuad::operator-=(const CycQuad& o) {
  for (int r = 0; r < 4; ++r) (*this)[r] -= o[r];
  return *this;
}

CycQuad& CycQuad::operator*=(const CycQuad& o) {
  std::array<QuadElem, 7> t{};
  for (int i = 0; i < 4; ++i) {
    if ((*this)[i].is_zero()) continue;
    for (int j = 0; j < 4; ++j)
      if (!o[j].is_zero()) t[static_cast<std::size_t>(i + j)] += (*this)[i] * o[j];
  }
  // x^4 = x^2 - 1, x^5 = x^3 - x, x^6 = -1
  t[0] -= t[4];
  t[2] += t[4];
  t[1] -= t[5];
  t[3] += t[5];
  t[0] -= t[6];
  for (int r = 0; r < 4; ++r) (*this)[r] = t[static_cast<std::size_t>(r)];
  return *this;
}

CycQuad& CycQuad::operator*=(const QuadElem& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

CycQuad CycQuad::operator-() const {
  CycQuad r;
  for (int i = 0; i < 4; ++i) r[i] = -(*this)[i];
  return r;
}

Complex CycQuad::embed(int place, unsigned digits) const {
  PrecisionGuard g(digits);
  const Real t = pi() / 6;
  Complex s;
  for (int r = 0; r < 4; ++r) {
    if ((*this)[r].is_zero()) continue;
    const Real c = (*this)[r].embed(place, digits);
    s += Complex(c * boost::multiprecision::cos(t * r), c * boost::multiprecision::sin(t * r));
  }
  return s;
}

std::string CycQuad::str() const {
  std::string s;
  for (int r = 0; r < 4; ++r) {
    if ((*this)[r].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + (*this)[r].str() + ")";
    if (r > 0) s += "*z^" + std::to_string(r);
  }
  return s.empty() ? "0" : s;
}

std::optional<CycQuad> cyc_divide(const CycQuad& a, const CycQuad& b) {
  // solve M s = a where column r of M is b * zeta^r
  std::array<std::array<QuadElem, 5>, 4> M{};
  for (int r = 0; r < 4; ++r) {
    const CycQuad col = b * CycQuad::zeta_pow(r);
    for (int i = 0; i < 4; ++i) M[i][r] = col[i];
  }
  for (int i = 0; i < 4; ++i) M[i][4] = a[i];
  std::array<int, 4> pivcol{-1, -1, -1, -1};
  int row = 0;
  for (int col = 0; col < 4 && row < 4; ++col) {
    int p = -1;
    for (int i = row; i < 4; ++i)
      if (!M[i][col].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(M[p], M[row]);
    const QuadElem inv = QuadElem::rational(1) / M[row][col];
    for (int j = col; j < 5; ++j) M[row][j] *= inv;
    for (int i = 0; i < 4; ++i) {
      if (i == row || M[i][col].is_zero()) continue;
      const QuadElem f = M[i][col];
      for (int j = col; j < 5; ++j) M[i][j] -= f * M[row][j];
    }
    pivcol[row] = col;
    ++row;
  }
  for (int i = row; i < 4; ++i)
    if (!M[i][4].is_zero()) return std::nullopt;
  CycQuad s;
  for (int i = 0; i < row; ++i) s[pivcol[i]] = M[i][4];
  return s;
}

Complex Prefactor::value(unsigned digits) const {
  PrecisionGuard g(digits);
  Real m = boost::multiprecision::pow(Real(2), pow2) * boost::multiprecision::pow(pi(), pow_pi);
  switch (((pow_i % 4) + 4) % 4) {
    case 0: return Complex(m);
    case 1: return Complex(Real(0), m);
    case 2: return Complex(-m);
    default: return Complex(Real(0), -m);
  }
}

// ---- series ----

void HilbertSeries::add_term(const QuadElem& nu, const CycQuad& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms.try_emplace(nu, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

namespace {

void require_adapted(i64 D, const Form& Q) {
  if (Q.a == 0 || Q.b * Q.b - 4 * Q.a * Q.c != D) throw std::invalid_argument("form does not have discriminant D");
  if (!adapted_basis_check(Q.a, Q.b, Q.c, 2, 3, D)) throw std::invalid_argument("form is not (2,3)-adapted");
}

void require_compatible(const HilbertSeries& a, const HilbertSeries& b) {
  if (a.D != b.D || !(a.Q == b.Q)) throw std::invalid_argument("series live on different bases");
}

int zeta_exponent(const Rat& x2) {
  Rat s = x2 * 6;
  s.canonicalize();
  if (s.get_den() != 1) throw std::logic_error("character argument not in (1/6)Z");
  const long n = mpz_fdiv_ui(s.get_num_mpz_t(), 12);
  return static_cast<int>(n);
}

}  // namespace

std::vector<Coset> theta_cosets(int j) {
  switch (j) {
    case 0: return {{Rat(0), Rat(1, 2)}};
    case 1: return {{Rat(1, 2), Rat(5, 6)}, {Rat(1, 2), Rat(1, 6)}};
    case 2: return {{Rat(0), Rat(1, 6)}, {Rat(0), Rat(5, 6)}};
    case 3: return {{Rat(1, 2), Rat(1, 2)}};
    default: throw std::invalid_argument("theta index must be 0..3");
  }
}

std::vector<std::pair<Rat, Rat>> coset_points(i64 D, const Form& Q, const Coset& c, const Rat& bound) {
  // tr(rho^2) = 2 x1^2 - 2 (b/a) x1 x2 + ((b^2 + D)/(2a^2)) x2^2
  const Rat A12 = frac(-Q.b, Q.a);
  const Rat A22 = frac(Q.b * Q.b + D, 2 * Q.a * Q.a);
  const double Bd = bound.get_d();
  const double x2max = std::sqrt(2.0 * Bd / static_cast<double>(D)) * std::abs(static_cast<double>(Q.a)) + 1.0;
  std::vector<std::pair<Rat, Rat>> out;
  const double d2 = c.delta.get_d();
  for (long n2 = static_cast<long>(std::floor(-x2max - d2)); n2 <= static_cast<long>(std::ceil(x2max - d2)); ++n2) {
    const Rat x2 = Rat(n2) + c.delta;
    const double x2d = x2.get_d();
    // 2 x1^2 + 2 A12 x1 x2 + A22 x2^2 <= B
    const double ctr = -A12.get_d() * x2d / 2.0;
    const double disc = ctr * ctr - (A22.get_d() * x2d * x2d - Bd) / 2.0;
    if (disc < -1e-9) continue;
    const double w = std::sqrt(std::max(disc, 0.0)) + 1.0;
    const double e1 = c.eps.get_d();
    for (long n1 = static_cast<long>(std::floor(ctr - w - e1)); n1 <= static_cast<long>(std::ceil(ctr + w - e1)); ++n1) {
      const Rat x1 = Rat(n1) + c.eps;
      const Rat t = 2 * x1 * x1 + 2 * A12 * x1 * x2 + A22 * x2 * x2;
      if (t <= bound) out.emplace_back(x1, x2);
    }
  }
  return out;
}

std::vector<LatticeTerm> nullwert_terms(i64 D, const Form& Q, int j, int axis, const Rat& bound) {
  require_adapted(D, Q);
  if (axis != 1 && axis != 2) throw std::invalid_argument("axis must be 1 or 2");
  const QuadElem lam = form_irrationality(D, Q);
  std::vector<LatticeTerm> out;
  for (const auto& c : theta_cosets(j)) {
    for (auto& [x1, x2] : coset_points(D, Q, c, bound)) {
      QuadElem rho = QuadElem(D, x1) + lam * QuadElem(D, x2);
      QuadElem w = axis == 1 ? rho : rho.conj();
      LatticeTerm t{x1, x2, rho * rho, CycQuad::zeta_pow(zeta_exponent(x2)) * w};
      out.push_back(std::move(t));
    }
  }
  return out;
}

HilbertSeries theta_deriv_nullwert(i64 D, const Form& Q, int j, int axis, const Rat& bound) {
  HilbertSeries s;
  s.D = D;
  s.Q = Q;
  s.bound = bound;
  s.prefactor = {1, 1, 1};
  for (const auto& t : nullwert_terms(D, Q, j, axis, bound)) s.add_term(t.nu, t.coeff);
  return s;
}

HilbertSeries series_add(const HilbertSeries& a, const HilbertSeries& b) {
  require_compatible(a, b);
  if (!(a.prefactor == b.prefactor)) throw std::invalid_argument("prefactor mismatch");
  HilbertSeries r = a;
  r.bound = std::min(a.bound, b.bound);
  for (const auto& [nu, c] : b.terms) r.add_term(nu, c);
  std::erase_if(r.terms, [&](const auto& kv) { return kv.first.trace() > r.bound; });
  return r;
}

HilbertSeries series_sub(const HilbertSeries& a, const HilbertSeries& b) {
  HilbertSeries nb = b;
  for (auto& [nu, c] : nb.terms) c = -c;
  return series_add(a, nb);
}

HilbertSeries series_mul(const HilbertSeries& a, const HilbertSeries& b) {
  require_compatible(a, b);
  HilbertSeries r;
  r.D = a.D;
  r.Q = a.Q;
  r.bound = std::min(a.bound, b.bound);
  r.prefactor = a.prefactor.times(b.prefactor);
  std::vector<std::pair<Rat, const std::pair<const QuadElem, CycQuad>*>> bt;
  for (const auto& kv : b.terms) bt.emplace_back(kv.first.trace(), &kv);
  for (const auto& [nu, c] : a.terms) {
    const Rat room = r.bound - nu.trace();
    if (room < 0) continue;
    for (const auto& [tr, kv] : bt)
      if (tr <= room) r.add_term(nu + kv->first, c * kv->second);
  }
  return r;
}

HilbertSeries gothic_form(i64 D, const Form& Q, const Rat& bound) {
  HilbertSeries t[4];
  for (int j = 0; j < 4; ++j) t[j] = theta_deriv_nullwert(D, Q, j, 2, bound);
  return series_sub(series_mul(t[0], t[1]), series_mul(t[2], t[3]));
}

HilbertSeries gothic_direct(i64 D, const Form& Q, const Rat& bound) {
  require_adapted(D, Q);
  const QuadElem lam = form_irrationality(D, Q);
  HilbertSeries s;
  s.D = D;
  s.Q = Q;
  s.bound = bound;
  s.prefactor = {3, 2, 1};
  struct Pt {
    QuadElem nu, w;
    Rat tr;
    int z;
  };
  auto points = [&](const Coset& c) {
    std::vector<Pt> v;
    for (auto& [x1, x2] : coset_points(D, Q, c, bound)) {
      QuadElem rho = QuadElem(D, x1) + lam * QuadElem(D, x2);
      QuadElem nu = rho * rho;
      Rat tr = nu.trace();
      v.push_back({nu, rho.conj(), tr, zeta_exponent(x2)});
    }
    return v;
  };
  const Coset pairs[2][2] = {{{Rat(0), Rat(1, 2)}, {Rat(1, 2), Rat(1, 6)}},
                             {{Rat(1, 2), Rat(1, 2)}, {Rat(0), Rat(1, 6)}}};
  for (int k = 0; k < 2; ++k) {
    const auto A = points(pairs[k][0]);
    const auto B = points(pairs[k][1]);
    for (const auto& a : A)
      for (const auto& b : B) {
        if (a.tr + b.tr > bound) continue;
        CycQuad c = CycQuad::zeta_pow(a.z + b.z) * (a.w * b.w);
        s.add_term(a.nu + b.nu, k == 0 ? c : -c);
      }
  }
  return s;
}

HilbertSeries F_ab(i64 D, const Form& Q, const Rat& bound, char which) {
  int i, j;
  if (which == 'a') {
    i = 0;
    j = 2;
  } else if (which == 'b') {
    i = 1;
    j = 3;
  } else {
    throw std::invalid_argument("F_ab: which must be 'a' or 'b'");
  }
  auto d1i = theta_deriv_nullwert(D, Q, i, 1, bound), d2i = theta_deriv_nullwert(D, Q, i, 2, bound);
  auto d1j = theta_deriv_nullwert(D, Q, j, 1, bound), d2j = theta_deriv_nullwert(D, Q, j, 2, bound);
  return series_sub(series_mul(d1i, d2j), series_mul(d1j, d2i));
}

HilbertSeries tau_derivative(const HilbertSeries& s, int axis) {
  if (axis != 1 && axis != 2) throw std::invalid_argument("axis must be 1 or 2");
  HilbertSeries r = s;
  r.prefactor = s.prefactor.times({0, 1, 1});
  for (auto& [nu, c] : r.terms) c *= (axis == 1 ? nu : nu.conj());
  std::erase_if(r.terms, [](const auto& kv) { return kv.second.is_zero(); });
  return r;
}

RationalSeries restrict_series(const HilbertSeries& s, i64 D, const RmPrototype& P) {
  const PrototypeFrame fr = prototype_frame(D, P);
  if (s.D != D || !(s.Q == fr.Q)) throw std::invalid_argument("series is not on the basis of this prototype");
  RationalSeries r;
  r.prefactor = s.prefactor;
  const QuadElem cut = fr.alpha * QuadElem(D, s.bound);
  // largest multiple of 1/1440 below bound * min(alpha, alpha^sigma)
  const double m = std::min(cut.to_double(0), cut.to_double(1));
  Rat b(static_cast<long>(std::floor(m * 1440.0)) + 1, 1440);
  while (!((cut - QuadElem(D, b)).sign(0) >= 0 && (cut - QuadElem(D, b)).sign(1) >= 0)) b -= Rat(1, 1440);
  r.bound = b;
  for (const auto& [nu, c] : s.terms) {
    QuadElem tq = fr.alpha * nu;
    const Rat t = tq.trace();
    const QuadElem gap = cut - QuadElem(D, t);
    if (gap.sign(0) < 0 || gap.sign(1) < 0) continue;
    auto [it, fresh] = r.terms.try_emplace(t, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) r.terms.erase(it);
    }
  }
  return r;
}

NumericValue numeric_eval(const HilbertSeries& s, const Complex& tau1, const Complex& tau2, unsigned digits,
                          int place) {
  if (tau1.im <= 0 || tau2.im <= 0) throw std::domain_error("numeric_eval: tau must lie in H^2");
  PrecisionGuard g(digits);
  const Real p = pi();
  NumericValue out;
  out.max_term = 0;
  for (const auto& [nu, c] : s.terms) {
    const Real n1 = nu.embed(place, digits), n2 = nu.embed(1 - place, digits);
    const Complex arg = Complex(Real(0), p) * (tau1 * n1 + tau2 * n2);
    const Complex term = c.embed(place, digits) * cexp(arg);
    const Real a = abs(term);
    if (a > out.max_term) out.max_term = a;
    out.value += term;
  }
  const Real mi = tau1.im < tau2.im ? tau1.im : tau2.im;
  out.tail = boost::multiprecision::exp(-p * mi * Real(s.bound.get_mpq_t()));
  return out;
}

std::optional<CycQuad> solve_global_scalar(const HilbertSeries& a, const HilbertSeries& b) {
  if (a.terms.size() != b.terms.size()) return std::nullopt;
  if (a.terms.empty()) return CycQuad(QuadElem::rational(1));
  std::optional<CycQuad> s;
  for (const auto& [nu, cb] : b.terms) {
    auto it = a.terms.find(nu);
    if (it == a.terms.end()) return std::nullopt;
    if (!s) s = cyc_divide(it->second, cb);
    if (!s) return std::nullopt;
  }
  for (const auto& [nu, cb] : b.terms)
    if (!(a.terms.at(nu) == *s * cb)) return std::nullopt;
  return s;
}

namespace {

nlohmann::json quad_json(const QuadElem& x) { return nlohmann::json::array({to_string(x.p()), to_string(x.q())}); }

nlohmann::json prefactor_json(const Prefactor& p) { return nlohmann::json::array({p.pow2, p.pow_pi, p.pow_i}); }

}  // namespace

nlohmann::json to_json(const CycQuad& c) {
  nlohmann::json j = nlohmann::json::array();
  for (int r = 0; r < 4; ++r) j.push_back(quad_json(c[r]));
  return j;
}

nlohmann::json to_json(const HilbertSeries& s) {
  nlohmann::json j;
  j["D"] = s.D;
  j["form"] = {s.Q.a, s.Q.b, s.Q.c};
  j["prefactor"] = prefactor_json(s.prefactor);
  j["bound"] = to_string(s.bound);
  j["terms"] = nlohmann::json::array();
  for (const auto& [nu, c] : s.terms) j["terms"].push_back({{"nu", quad_json(nu)}, {"coeff", to_json(c)}});
  return j;
}

nlohmann::json to_json(const RationalSeries& s) {
  nlohmann::json j;
  j["prefactor"] = prefactor_json(s.prefactor);
  j["bound"] = to_string(s.bound);
  j["terms"] = nlohmann::json::array();
  for (const auto& [t, c] : s.terms) j["terms"].push_back({{"exp", to_string(t)}, {"coeff", to_json(c)}});
  return j;
}

}  // namespace gothic
