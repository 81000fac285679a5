#include "gothic/hypergeom.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

namespace gothic {

namespace {

// ---- generic truncated power series ----

template <class T>
std::vector<T> zeros(int N) {
  return std::vector<T>(static_cast<std::size_t>(N), T(0));
}

// sum_{i=lo}^{hi} a[i] b[n-i]
Rat conv(const RatSeries& a, const RatSeries& b, int n, int lo, int hi) {
  Rat s(0);
  for (int i = lo; i <= hi; ++i) {
    const auto& x = a[static_cast<std::size_t>(i)];
    if (sgn(x) == 0) continue;
    s += x * b[static_cast<std::size_t>(n - i)];
  }
  return s;
}

Real conv(const RealSeries& a, const RealSeries& b, int n, int lo, int hi) {
  Real s(0), t;
  for (int i = lo; i <= hi; ++i) {
    mpfr_mul(t.backend().data(), a[static_cast<std::size_t>(i)].backend().data(),
             b[static_cast<std::size_t>(n - i)].backend().data(), MPFR_RNDN);
    mpfr_add(s.backend().data(), s.backend().data(), t.backend().data(), MPFR_RNDN);
  }
  return s;
}

template <class T>
std::vector<T> mul(const std::vector<T>& a, const std::vector<T>& b, int N) {
  auto c = zeros<T>(N);
  const int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
  for (int n = 0; n < N; ++n) {
    const int lo = std::max(0, n - nb + 1), hi = std::min(n, na - 1);
    if (lo <= hi) c[static_cast<std::size_t>(n)] = conv(a, b, n, lo, hi);
  }
  return c;
}

template <class T>
std::vector<T> inv(const std::vector<T>& a, int N) {
  if (a.empty() || a[0] == 0) throw std::domain_error("series inverse needs a nonzero constant term");
  auto r = zeros<T>(N);
  const T i0 = T(1) / a[0];
  r[0] = i0;
  for (int n = 1; n < N; ++n) {
    const int hi = std::min(n, static_cast<int>(a.size()) - 1);
    r[static_cast<std::size_t>(n)] = -conv(a, r, n, 1, hi) * i0;
  }
  return r;
}

template <class T>
std::vector<T> derivative(const std::vector<T>& a) {
  std::vector<T> d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * T(static_cast<long>(i)));
  return d;
}

// exp(a), a[0] = 0
template <class T>
std::vector<T> exp_series(const std::vector<T>& a, int N) {
  auto r = zeros<T>(N);
  r[0] = T(1);
  auto da = derivative(a);  // da[i-1] = i a[i]
  for (int n = 1; n < N; ++n) {
    const int hi = std::min(n - 1, static_cast<int>(da.size()) - 1);
    // n r[n] = sum_{i=1}^{n} i a[i] r[n-i]
    T s = conv(da, r, n - 1, 0, hi);
    r[static_cast<std::size_t>(n)] = s / T(n);
  }
  return r;
}

// log(a), a[0] = 1
template <class T>
std::vector<T> log_series(const std::vector<T>& a, int N) {
  auto q = mul(derivative(a), inv(a, N), N - 1);
  auto r = zeros<T>(N);
  for (int n = 1; n < N; ++n) r[static_cast<std::size_t>(n)] = q[static_cast<std::size_t>(n - 1)] / T(n);
  return r;
}

// f(g), g[0] = 0
template <class T>
std::vector<T> compose(const std::vector<T>& f, const std::vector<T>& g, int N) {
  auto r = zeros<T>(N);
  for (int i = std::min(N, static_cast<int>(f.size())) - 1; i >= 0; --i) {
    r = mul(r, g, N);
    r[0] += f[static_cast<std::size_t>(i)];
  }
  return r;
}

// f = t h(t) with h(0) = 1; [Q^n] t = (1/n) [t^{n-1}] h^{-n}
template <class T>
std::vector<T> reversion(const std::vector<T>& f, int N) {
  if (f.size() < 2 || f[0] != 0 || f[1] != 1) throw std::domain_error("reversion needs f = t + O(t^2)");
  std::vector<T> h(f.begin() + 1, f.end());
  // h^{-n} = exp(-n log h), needed only below t^n
  const auto lh = log_series(h, N);
  auto t = zeros<T>(N);
  for (int n = 1; n < N; ++n) {
    std::vector<T> a(lh.begin(), lh.begin() + n);
    for (auto& x : a) x *= T(-n);
    t[static_cast<std::size_t>(n)] = exp_series(a, n)[static_cast<std::size_t>(n - 1)] / T(n);
  }
  return t;
}

template <class T>
std::vector<T> y2_over_y1(const std::vector<T>& y1, const std::vector<T>& y2, int N) {
  return mul(y2, inv(y1, N), N);
}

RealSeries to_real(const RatSeries& s) {
  RealSeries r;
  r.reserve(s.size());
  for (const auto& x : s) r.emplace_back(x.get_mpq_t());
  return r;
}

// t(Q), inverse of the Q-map of L(a, b, 1)
template <class T>
std::vector<T> t_of_Q(const std::vector<T>& y1, const std::vector<T>& y2, int N) {
  auto e = exp_series(y2_over_y1(y1, y2, N), N);
  std::vector<T> q(static_cast<std::size_t>(N), T(0));
  for (int n = 1; n < N; ++n) q[static_cast<std::size_t>(n)] = e[static_cast<std::size_t>(n - 1)];
  return reversion(q, N);
}

Real sqrt3() { return boost::multiprecision::sqrt(Real(3)); }

// alpha = 2 + 2 sqrt3/3 at the given place
Real alpha_at(int place) {
  const Real s = sqrt3();
  return place == 0 ? Real(2 + 2 * s / 3) : Real(2 - 2 * s / 3);
}

std::pair<Rat, Rat> params(int place) {
  return place == 0 ? std::pair{Rat(5, 12), Rat(1, 4)} : std::pair{Rat(1, 4), Rat(1, 12)};
}

// polynomial extrapolation of (h_i, v_i) to h = 0 (Neville)
Real extrapolate(const std::vector<Real>& h, std::vector<Real> v) {
  const std::size_t n = v.size();
  for (std::size_t m = 1; m < n; ++m)
    for (std::size_t i = 0; i + m < n; ++i)
      v[i] = (h[i + m] * v[i] - h[i] * v[i + 1]) / (h[i + m] - h[i]);
  return v[0];
}

}  // namespace

RatSeries y1_series(const Rat& a, const Rat& b, int N) {
  RatSeries y(static_cast<std::size_t>(N), Rat(0));
  Rat c(1);
  for (int n = 0; n < N; ++n) {
    y[static_cast<std::size_t>(n)] = c;
    c *= (a + n) * (b + n) / Rat((n + 1) * (n + 1));
  }
  return y;
}

RatSeries y2_series(const Rat& a, const Rat& b, int N) {
  RatSeries y(static_cast<std::size_t>(N), Rat(0));
  Rat c(1), h(0);
  for (int r = 1; r < N; ++r) {
    const int k = r - 1;
    h += 1 / (a + k) + 1 / (b + k) - frac(2, 1 + k);
    c *= (a + k) * (b + k) / Rat(r * r);
    y[static_cast<std::size_t>(r)] = c * h;
  }
  return y;
}

RatSeries q_map_series(const Rat& a, const Rat& b, int N) {
  auto e = exp_series(y2_over_y1(y1_series(a, b, N), y2_series(a, b, N), N), N);
  RatSeries q(static_cast<std::size_t>(N), Rat(0));
  for (int n = 1; n < N; ++n) q[static_cast<std::size_t>(n)] = e[static_cast<std::size_t>(n - 1)];
  return q;
}

RatSeries series_reversion(const RatSeries& f, int N) { return reversion(f, N); }

std::pair<RatSeries, RatSeries> ode_residuals(const Rat& a, const Rat& b, int N) {
  const auto y1 = y1_series(a, b, N), y2 = y2_series(a, b, N);
  // L y = t(1-t) y'' + (1 - (a+b+1) t) y' - ab y;  L(y1 log t + y2) = L y2 + 2(1-t) y1' - (a+b) y1
  auto L = [&](const RatSeries& y, int n) {
    auto at = [&](int i) { return (i >= 0 && i < N) ? y[static_cast<std::size_t>(i)] : Rat(0); };
    // coefficient of t^n
    Rat r = Rat((n + 1) * n) * at(n + 1) - Rat(n * (n - 1)) * at(n);
    r += Rat(n + 1) * at(n + 1) - (a + b + 1) * Rat(n) * at(n) - a * b * at(n);
    return r;
  };
  RatSeries r1, r2;
  for (int n = 0; n + 1 < N; ++n) {
    r1.push_back(L(y1, n));
    const Rat d1n = Rat(n + 1) * y1[static_cast<std::size_t>(n + 1)];
    const Rat d1m = Rat(n) * y1[static_cast<std::size_t>(n)];
    r2.push_back(L(y2, n) + 2 * (d1n - d1m) - (a + b) * y1[static_cast<std::size_t>(n)]);
  }
  return {r1, r2};
}

Real closed_A(int place, unsigned digits) {
  PrecisionGuard g(digits);
  const Real s = sqrt3();
  const Real ex = place == 0 ? Real(-6 - s) : Real(-6 + s);
  using boost::multiprecision::pow;
  return pow(Real(2 + s), ex) * pow(Real(1 + s), 9) * pow(Real(3 + s), 3);
}

unsigned working_digits(unsigned digits, int N) { return digits + 2 * static_cast<unsigned>(N) + 20; }

ConstantResult constant_A(int place, unsigned digits, int N) {
  if (N < 40) throw std::invalid_argument("constant_A: N too small");
  const unsigned wd = working_digits(digits, N);
  PrecisionGuard g(wd);
  const auto [a, b] = params(place);
  const auto y1 = to_real(y1_series(a, b, N)), y2 = to_real(y2_series(a, b, N));
  const auto t = t_of_Q(y1, y2, N);
  RealSeries w(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) w[i] = -t[i];
  w[0] += 1;
  auto L = log_series(w, N);
  for (auto& x : L) x = -x / 3;
  const auto bq = exp_series(L, N);

  ConstantResult res;
  res.N = N;
  std::vector<Real> R, h;
  for (int n = 1; n + 1 < N; ++n) {
    R.push_back(bq[static_cast<std::size_t>(n)] / bq[static_cast<std::size_t>(n + 1)]);
    h.push_back(Real(1) / n);
  }
  for (std::size_t i = 0; i + 1 < R.size(); ++i) res.ratio_deltas.push_back(boost::multiprecision::abs(R[i + 1] - R[i]));
  const auto& d = res.ratio_deltas;
  const std::size_t m = d.size();
  res.geometric = d[m / 2] < d[m / 2 - 20] * Real(1e-4);
  if (res.geometric) {
    res.limit = R.back();
  } else {
    const std::size_t K = 21;
    std::vector<Real> hh(h.end() - K, h.end()), vv(R.end() - K, R.end());
    res.limit = extrapolate(hh, vv);
    std::vector<Real> h2(h.end() - K + 4, h.end()), v2(R.end() - K + 4, R.end());
    const Real alt = extrapolate(h2, v2);
    if (boost::multiprecision::abs(alt - res.limit) > boost::multiprecision::abs(res.limit) * Real(1e-12))
      throw std::runtime_error("constant_A: ratio sequence does not converge");
  }
  const Real q0 = boost::multiprecision::exp(-2 * pi() / alpha_at(place));
  res.value = res.limit / q0;
  res.closed = closed_A(place, wd);
  res.abs_err = boost::multiprecision::abs(res.value - res.closed);
  return res;
}

RatSeries phi_exact_coeffs(int count) {
  const int N = count + 1;
  const auto u = t_of_Q(y1_series(Rat(5, 12), Rat(1, 4), N), y2_series(Rat(5, 12), Rat(1, 4), N), N);
  const auto d1 = y2_over_y1(y1_series(Rat(1, 4), Rat(1, 12), N), y2_series(Rat(1, 4), Rat(1, 12), N), N);
  const auto d0 = y2_over_y1(y1_series(Rat(5, 12), Rat(1, 4), N), y2_series(Rat(5, 12), Rat(1, 4), N), N);
  RatSeries d(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) d[static_cast<std::size_t>(i)] = d1[static_cast<std::size_t>(i)] - d0[static_cast<std::size_t>(i)];
  auto r = compose(d, u, N);
  return RatSeries(r.begin() + 1, r.end());
}

PhiExpansion phi_expansion(int N, unsigned digits) {
  PhiExpansion ph;
  const unsigned wd = working_digits(digits, N);
  PrecisionGuard g(wd);
  ph.digits = digits;
  ph.slope = QuadElem(3, Rat(2), Rat(-1));
  const auto p0 = params(0), p1 = params(1);
  const auto y1 = to_real(y1_series(p0.first, p0.second, N)), y2 = to_real(y2_series(p0.first, p0.second, N));
  const auto z1 = to_real(y1_series(p1.first, p1.second, N)), z2 = to_real(y2_series(p1.first, p1.second, N));
  const auto u = t_of_Q(y1, y2, N);
  const auto d0 = y2_over_y1(y1, y2, N), d1 = y2_over_y1(z1, z2, N);
  RealSeries d(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) d[static_cast<std::size_t>(i)] = d1[static_cast<std::size_t>(i)] - d0[static_cast<std::size_t>(i)];
  ph.r = compose(d, u, N);
  ph.A = closed_A(0, wd);
  ph.Atilde = closed_A(1, wd);
  const Real p = pi();
  const Real s = sqrt3();
  // alpha^sigma / (2 pi i) = -i (3 - sqrt3) / (3 pi)
  ph.prefactor = Complex(Real(0), -(3 - s) / (3 * p));
  ph.constant = ph.prefactor * Complex(boost::multiprecision::log(ph.A / ph.Atilde));
  const Real l = boost::multiprecision::log(2 + s);
  ph.constant_closed = Complex(Real(0), 2 * (1 - s) * l / p);  // -(2(1 - sqrt3)/(pi i)) log(2 + sqrt3)
  return ph;
}

Complex phi_eval(const PhiExpansion& ph, const Complex& tau) {
  PrecisionGuard g(working_digits(ph.digits, static_cast<int>(ph.r.size())));
  const Real p = pi();
  const Real al = alpha_at(0);
  const Complex q = cexp(Complex(Real(0), 2 * p / al) * tau);
  const Complex z = q * ph.A;
  if (abs(z) >= ph.A) throw std::domain_error("phi_eval: tau outside the disc of convergence");
  Complex S;
  for (std::size_t n = ph.r.size(); n-- > 1;) S = (S + Complex(ph.r[n])) * z;
  const Real sl = ph.slope.embed(0, ph.digits + 20);
  return tau * sl + ph.constant + ph.prefactor * S;
}

std::pair<Complex, Complex> embed_point(const PhiExpansion& ph, const Complex& tau) {
  if (tau.im <= 0) throw std::domain_error("embed_point: tau must lie in H");
  PrecisionGuard g(ph.digits + 20);
  const Real s = sqrt3();
  // C^{-1} tau = (tau + 3 sqrt3 + 15) / (3 sqrt3 + 9); C^sigma z = (9 - 3 sqrt3) z + 3 sqrt3 - 15
  const Complex w = (tau + Complex(Real(3 * s + 15))) * Real(1 / (3 * s + 9));
  const Complex f = phi_eval(ph, w);
  const Complex img = f * Real(9 - 3 * s) + Complex(Real(3 * s - 15));
  if (img.im <= 0) throw std::domain_error("embed_point: image leaves H");
  return {tau, img};
}

// ---- G12 vanishing ----

std::string G12Convention::str() const {
  std::ostringstream o;
  o << "Q=(" << Q.a << "," << Q.b << "," << Q.c << ") sign=" << (sign > 0 ? "+" : "-") << " swap=" << (swap ? 1 : 0)
    << " t=" << t.str();
  return o.str();
}

namespace {

using cld = std::complex<long double>;

struct ThetaSum {
  cld value{0, 0};
  long double max_term = 0;
};

ThetaSum theta_numeric(long double lam, long double lams, long double eps, long double delta, cld t1, cld t2) {
  const long double w1 = t1.imag(), w2 = t2.imag();
  const long double W = 30;
  const long double A11 = w1 + w2, A12 = w1 * lam + w2 * lams, A22 = w1 * lam * lam + w2 * lams * lams;
  const long double det = A11 * A22 - A12 * A12;
  const long double x2max = std::sqrt(W * A11 / det) + 1;
  const long double PI = 3.141592653589793238462643383279502884L;
  const cld I(0, 1);
  ThetaSum s;
  for (long n2 = static_cast<long>(std::floor(-x2max - delta)); n2 <= static_cast<long>(std::ceil(x2max - delta)); ++n2) {
    const long double x2 = n2 + delta;
    const long double ctr = -A12 * x2 / A11;
    const long double disc = ctr * ctr - (A22 * x2 * x2 - W) / A11;
    if (disc < 0) continue;
    const long double wd = std::sqrt(disc) + 1;
    for (long n1 = static_cast<long>(std::floor(ctr - wd - eps)); n1 <= static_cast<long>(std::ceil(ctr + wd - eps)); ++n1) {
      const long double x1 = n1 + eps;
      const long double r = x1 + x2 * lam, rs = x1 + x2 * lams;
      const cld term = std::exp(I * PI * x2) * rs * std::exp(I * PI * (r * r * t1 + rs * rs * t2));
      s.value += term;
      s.max_term = std::max(s.max_term, std::abs(term));
    }
  }
  return s;
}

// entries (u, v) with z = u + v lambda; false when not integral
bool coords(const QuadElem& z, const QuadElem& lam, Rat& u, Rat& v) {
  v = z.q() / lam.q();
  u = z.p() - v * lam.p();
  return u.get_den() == 1 && v.get_den() == 1;
}

bool generates(const Form& Q, int sign, const QuadElem& t) {
  const QuadElem lam(12, Rat(-Q.b, 2 * Q.a), Rat(sign, 2 * Q.a));
  const QuadElem e1 = t * QuadElem(12, Rat(0), Rat(1, 12)), e2 = t * QuadElem(12, Rat(1, 2));
  Rat u1, v1, u2, v2;
  if (!coords(e1, lam, u1, v1) || !coords(e2, lam, u2, v2)) return false;
  const Rat det = u1 * v2 - u2 * v1;
  return det == 1 || det == -1;
}

}  // namespace

G12Value g12_evaluate(const G12Convention& c, const Complex& tau1, const Complex& tau2, unsigned digits) {
  (void)digits;
  const long double s12 = std::sqrt(12.0L);
  const long double lam = (-c.Q.b + c.sign * s12) / (2.0L * c.Q.a), lams = (-c.Q.b - c.sign * s12) / (2.0L * c.Q.a);
  cld t1(static_cast<long double>(tau1.re), static_cast<long double>(tau1.im));
  cld t2(static_cast<long double>(tau2.re), static_cast<long double>(tau2.im));
  if (c.swap) std::swap(t1, t2);
  const QuadElem kappa = QuadElem::rational(1) / (c.t * c.t);
  t1 *= static_cast<long double>(kappa.to_double(0));
  t2 *= static_cast<long double>(kappa.to_double(1));
  if (t1.imag() <= 0 || t2.imag() <= 0) throw std::domain_error("g12_evaluate: point outside H^2");
  const ThetaSum a1 = theta_numeric(lam, lams, 0, 0.5L, t1, t2), b1 = theta_numeric(lam, lams, 0.5L, 1.0L / 6, t1, t2);
  const ThetaSum a2 = theta_numeric(lam, lams, 0.5L, 0.5L, t1, t2), b2 = theta_numeric(lam, lams, 0, 1.0L / 6, t1, t2);
  const cld v = a1.value * b1.value - a2.value * b2.value;
  const long double m = std::max(a1.max_term * b1.max_term, a2.max_term * b2.max_term);
  return {static_cast<double>(std::abs(v) / m), static_cast<double>(std::abs(v))};
}

std::vector<G12Convention> g12_conventions() {
  std::vector<Form> forms;
  for (i64 aa = 2; aa <= 12; aa += 2)
    for (i64 a : {aa, -aa})
      for (i64 cc = 3; cc <= 12; cc += 3)
        for (i64 c : {cc, -cc}) {
      const i64 bb = 12 + 4 * a * c;
      if (bb < 0 || !is_square(bb)) continue;
      const i64 b = isqrt(bb);
      forms.push_back({a, b, c});
      if (b != 0) forms.push_back({a, -b, c});
        }
  std::vector<G12Convention> out;
  for (const auto& Q : forms)
    for (int sign : {1, -1}) {
      std::vector<QuadElem> ts{QuadElem::rational(1)};
      for (int den : {1, 2})
        for (int x = 0; x <= 12; ++x)
          for (int y = -12; y <= 12; ++y) {
            if (x == 0 && y <= 0) continue;
            if (den == 2 && (x + y) % 2 != 0) continue;
            // t = (x + y sqrt3)/den = x/den + (y/(2 den)) sqrt12
            const QuadElem t(12, Rat(x, den), Rat(y, 2 * den));
            if (t.is_zero()) continue;
            if (generates(Q, sign, t) && std::find(ts.begin(), ts.end(), t) == ts.end()) ts.push_back(t);
          }
      for (bool swap : {false, true})
        for (const auto& t : ts) out.push_back({Q, sign, swap, t});
    }
  return out;
}

G12Search g12_search(const std::vector<std::pair<Complex, Complex>>& points, unsigned digits) {
  G12Search res;
  double best = 1e300;
  for (const auto& c : g12_conventions()) {
    double worst = 0;
    try {
      for (const auto& [t1, t2] : points) worst = std::max(worst, g12_evaluate(c, t1, t2, digits).residual);
    } catch (const std::domain_error&) {
      continue;
    }
    res.log.emplace_back(c, worst);
    best = std::min(best, worst);
  }
  // first convention in enumeration order within a factor 10 of the optimum; ties are rounding noise
  for (const auto& [c, worst] : res.log)
    if (worst <= 10 * best) {
      res.best = c;
      for (const auto& [t1, t2] : points) res.best_residuals.push_back(g12_evaluate(c, t1, t2, digits).residual);
      break;
    }
  std::stable_sort(res.log.begin(), res.log.end(), [](const auto& x, const auto& y) { return x.second < y.second; });
  return res;
}

}  // namespace gothic
