#include "gothic/asymptotics.hpp"

#include <stdexcept>

#include "gothic/prototypes.hpp"

namespace gothic {

OneVarSeries series_mul(const OneVarSeries& a, const OneVarSeries& b) {
  OneVarSeries r;
  r.bound = std::min(a.bound, b.bound);
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      Rat e = ea + eb;
      if (e > r.bound) break;
      r.terms[e] += ca * cb;
    }
  std::erase_if(r.terms, [](const auto& kv) { return sgn(kv.second) == 0; });
  return r;
}

namespace {

void require_fundamental(i64 D) {
  if (!is_fundamental(D)) throw std::invalid_argument("needs a fundamental discriminant: " + std::to_string(D));
}

Rat gamma_prime_power(i64 D, i64 p, int r) {
  const int chi = kronecker(D, p);
  if (p == 2) {
    if (r <= 1) return 1;
    if (r == 2) return 2 * chi;
    if (r == 3 && D % 2 == 0) return -2;
    return 0;
  }
  if (r == 0) return 1;
  if (r == 1) return chi;
  if (r == 2 && D % p == 0) return -1;
  return 0;
}

}  // namespace

Rat gauss_gamma(i64 D, i64 c) {
  require_fundamental(D);
  if (c <= 0) throw std::invalid_argument("gauss_gamma: c must be positive");
  Rat g(1);
  for (auto [p, e] : factor(c)) {
    g *= gamma_prime_power(D, p, e);
    if (sgn(g) == 0) break;
  }
  return g;
}

Rat e_star(i64 D, i64 k, i64 Cmax) {
  require_fundamental(D);
  Rat s(0);
  for (i64 c = 1; c <= Cmax; ++c) {
    Rat g = gauss_gamma(D, c);
    if (sgn(g) == 0) continue;
    const i64 d = gcd(c, 2 * k);
    s += g * frac(d * d, c * c);
  }
  s.canonicalize();
  return s;
}

Real e_star_real(i64 D, i64 k, i64 Cmax, unsigned digits) {
  require_fundamental(D);
  if (Cmax < 1) throw std::invalid_argument("e_star: Cmax must be positive");
  // gamma_c for all c <= Cmax through a smallest-prime-factor sieve
  std::vector<i64> spf(static_cast<std::size_t>(Cmax + 1), 0);
  for (i64 p = 2; p <= Cmax; ++p)
    if (spf[static_cast<std::size_t>(p)] == 0)
      for (i64 m = p; m <= Cmax; m += p)
        if (spf[static_cast<std::size_t>(m)] == 0) spf[static_cast<std::size_t>(m)] = p;
  std::vector<int> gam(static_cast<std::size_t>(Cmax + 1), 0);
  gam[1] = 1;
  PrecisionGuard guard(digits);
  Real s = 1;
  for (i64 c = 2; c <= Cmax; ++c) {
    const i64 p = spf[static_cast<std::size_t>(c)];
    i64 rest = c;
    int r = 0;
    while (rest % p == 0) {
      rest /= p;
      ++r;
    }
    const int g = gam[static_cast<std::size_t>(rest)] * static_cast<int>(gamma_prime_power(D, p, r).get_num().get_si());
    gam[static_cast<std::size_t>(c)] = g;
    if (g == 0) continue;
    const i64 d = gcd(c, 2 * k);
    s += Real(g * d * d) / (Real(c) * Real(c));
  }
  return s;
}

Rat ratio_closed_form(i64 D, i64 k) {
  if (k <= 0 || moebius(k) == 0) throw std::invalid_argument("ratio_closed_form: k must be squarefree");
  Rat r(1);
  if (k == 1) return r;
  for (auto [p, e] : factor(k)) {
    r *= Rat(1 + kronecker(D, p));
    r /= Rat(p * p + 1, p * p);
  }
  r.canonicalize();
  return r;
}

Real e_bar_constant(unsigned digits) {
  PrecisionGuard g(digits);
  const Real p = pi();
  // pi^{1/2} zeta(2) / (16 Gamma(5/2))
  return boost::multiprecision::sqrt(p) * (p * p / 6) / (16 * boost::multiprecision::tgamma(Real(5) / 2));
}

Real e_bar(i64 n, i64 k, i64 Cmax, unsigned digits) {
  if (n <= 0) throw std::invalid_argument("e_bar: n must be positive");
  PrecisionGuard g(digits);
  Real nn(n);
  return e_bar_constant(digits) * nn * boost::multiprecision::sqrt(nn) / Real(k * k) * e_star_real(n, k, Cmax, digits);
}

Real L2_chi(i64 D, i64 terms, unsigned digits) {
  PrecisionGuard g(digits);
  Real s = 0;
  for (i64 n = 1; n <= terms; ++n) {
    const int c = kronecker(D, n);
    if (c) s += Real(c) / (Real(n) * Real(n));
  }
  return s;
}

bool eta_check(i64 D) {
  if (D <= 0 || D % 24 != 1 || is_square(D)) throw std::invalid_argument("eta_check needs non-square D = 1 mod 24");
  i64 left = 0, right = 0;
  for (i64 b = 1; b * b < D; ++b) {
    const i64 r = b % 12;
    if (r == 1 || r == 11) left += sigma1((D - b * b) / 24);
    else if (r == 5 || r == 7) right += sigma1((D - b * b) / 24);
  }
  return left == right;
}

OneVarSeries series_e(i64 nmax, i64 k) {
  if (nmax < 1) throw std::invalid_argument("series_e: nmax must be positive");
  OneVarSeries g2, th;
  g2.bound = th.bound = Rat(nmax);
  g2.terms[Rat(0)] = Rat(-1, 24);
  const Sigma1Table sig(nmax / (4 * k) + 1);
  for (i64 a = 1; 4 * k * a <= nmax; ++a) g2.terms[Rat(4 * k * a)] = Rat(sig(a));
  for (i64 l = 0; l * l <= nmax; ++l) th.terms[Rat(l * l)] = Rat(l == 0 ? 1 : 2);
  return series_mul(g2, th);
}

Rat eta_e2_coefficient(i64 D) {
  if (D <= 0 || D % 24 != 1) throw std::invalid_argument("eta_e2_coefficient needs D = 1 mod 24");
  const Rat top(D, 24);
  OneVarSeries e2, eta;
  e2.bound = eta.bound = top;
  e2.terms[Rat(0)] = Rat(1, 24);
  for (i64 n = 1; 24 * n <= D; ++n) e2.terms[Rat(n)] = Rat(-sigma1(n));
  for (i64 b = 1; b * b <= D; ++b) {
    const int chi = kronecker(12, b);
    if (chi) eta.terms[frac(b * b, 24)] = Rat(chi);
  }
  return series_mul(e2, eta).coeff(top);
}

Rat predicted_ratio(i64 residue) {
  switch (((residue % 24) + 24) % 24) {
    case 1: return frac(4, 50);
    case 4:
    case 9:
    case 16: return frac(2, 50);
    case 0:
    case 12: return Rat(1, 50);
    default: throw std::invalid_argument("residue class carries no norm-6 ideal");
  }
}

std::vector<AsymptRow> asymptotic_scan(i64 dmin, i64 dmax, int residue) {
  if (dmin < 5 || dmax < dmin) throw std::invalid_argument("asymptotic_scan: bad range");
  const Sigma1Table sig(dmax / 4 + 1);
  std::vector<AsymptRow> rows;
  for (i64 D = dmin; D <= dmax; ++D) {
    const i64 r = D % 24;
    if (r != 0 && r != 1 && r != 4 && r != 9 && r != 12 && r != 16) continue;
    if (residue >= 0 && r != residue) continue;
    if (!is_fundamental(D)) continue;
    const double e6 = static_cast<double>(prototype_sum_fundamental(D, 6, sig));
    const double e1 = static_cast<double>(prototype_sum_fundamental(D, 1, sig));
    AsymptRow row{D, r, e6 / e1, predicted_ratio(r).get_d(), 0};
    row.rel_err = (row.ratio - row.predicted) / row.predicted;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace gothic
