#include "gothic/prototypes.hpp"

#include <algorithm>
#include <stdexcept>

namespace gothic {

namespace {

void require_discriminant(i64 D) {
  if (!is_discriminant(D)) throw std::invalid_argument("not a valid non-square discriminant: " + std::to_string(D));
}

}  // namespace

std::vector<FormPrototype> enumerate_Pk(i64 D, i64 k) {
  require_discriminant(D);
  if (k <= 0) throw std::invalid_argument("k must be positive");
  const i64 f = split_discriminant(D).f;
  std::vector<FormPrototype> out;
  const i64 bmax = isqrt(D);
  for (i64 b = -bmax; b <= bmax; ++b) {
    const i64 r = D - b * b;
    if (r <= 0 || r % (4 * k)) continue;
    const i64 n = r / (4 * k);  // = a * (-c)
    for (i64 a : divisors(n)) {
      const i64 c = -(n / a);
      if (f > 1) {
        const i64 c0 = squarefree_part(c);
        if (gcd(gcd(f, b < 0 ? -b : b), (-c) / c0) != 1) continue;
      }
      out.push_back({a, b, c, k});
    }
  }
  return out;
}

i64 prototype_sum(i64 D, i64 k) {
  const i64 f = split_discriminant(D).f;
  if (f == 1) {
    require_discriminant(D);
    i64 s = 0;
    const i64 bmax = isqrt(D);
    for (i64 b = -bmax; b <= bmax; ++b) {
      const i64 r = D - b * b;
      if (r > 0 && r % (4 * k) == 0) s += sigma1(r / (4 * k));
    }
    return s;
  }
  i64 s = 0;
  for (const auto& p : enumerate_Pk(D, k)) s += p.a;
  return s;
}

i64 prototype_sum_fundamental(i64 D, i64 k, const Sigma1Table& sigma) {
  i64 s = 0;
  const i64 bmax = isqrt(D);
  const i64 mod = 4 * k;
  // b^2 = D mod 4k; iterate b >= 0 and double the nonzero ones
  for (i64 b = (bmax * bmax == D ? bmax - 1 : bmax); b >= 0; --b) {
    const i64 r = D - b * b;
    if (r % mod) continue;
    const i64 v = sigma(r / mod);
    s += (b == 0) ? v : 2 * v;
  }
  return s;
}

std::vector<RmPrototype> enumerate_PD(i64 D) {
  require_discriminant(D);
  const i64 f = split_discriminant(D).f;
  std::vector<RmPrototype> out;
  const i64 emax = isqrt(D);
  for (i64 e = -emax; e <= emax; ++e) {
    const i64 r = D - e * e;
    if (r <= 0 || r % 24) continue;
    const i64 n = r / 24;  // = l^2 m
    for (i64 l = 1; l * l <= n; ++l) {
      if (n % (l * l)) continue;
      if (gcd(gcd(e < 0 ? -e : e, l), f) != 1) continue;
      out.push_back({l, e, n / (l * l)});
    }
  }
  std::sort(out.begin(), out.end(), [](const RmPrototype& x, const RmPrototype& y) {
    if (x.e != y.e) return x.e < y.e;
    if (x.ell != y.ell) return x.ell < y.ell;
    return x.m < y.m;
  });
  return out;
}

Rat chi_gamma0(i64 m) {
  if (m <= 0) throw std::invalid_argument("chi_gamma0: m must be positive");
  Rat r = frac(-m, 6);
  for (auto [p, e] : factor(m)) r *= Rat(p + 1, p);
  r.canonicalize();
  return r;
}

std::vector<Norm6Ideal> norm6_ideals(i64 D) {
  require_discriminant(D);
  std::vector<Norm6Ideal> out;
  for (i64 r = 0; r < 12; ++r)
    if ((r * r - D) % 24 == 0) out.push_back({r});
  return out;
}

bool adapted_basis_check(i64 a, i64 b, i64 c, i64 d1, i64 d2, i64 D) {
  if (a == 0) throw std::invalid_argument("adapted_basis_check: a must be nonzero");
  if (b * b - 4 * a * c != D) throw std::invalid_argument("adapted_basis_check: discriminant mismatch");
  return a % d1 == 0 && c % d2 == 0;
}

QuadElem form_irrationality(i64 D, const Form& Q) {
  return QuadElem(D, Rat(-Q.b, 2 * Q.a), Rat(1, 2 * Q.a));
}

PrototypeFrame prototype_frame(i64 D, const RmPrototype& P) {
  if (P.ell <= 0 || P.m <= 0 || P.e * P.e + 24 * P.ell * P.ell * P.m != D)
    throw std::invalid_argument("prototype does not satisfy D = e^2 + 24 l^2 m");
  PrototypeFrame fr;
  fr.Q = {2 * P.ell, P.e, -3 * P.ell * P.m};
  fr.lambda = form_irrationality(D, fr.Q);
  fr.alpha = -fr.lambda.conj() / QuadElem::sqrt_d(D);
  return fr;
}

Form default_adapted_form(i64 D) {
  if (norm6_ideals(D).empty()) throw std::invalid_argument("no (2,3)-adapted form: D is not a square mod 24");
  for (i64 a = 2;; a += 2) {
    for (i64 ab = 0; ab <= 4 * a * a + D; ++ab) {
      for (i64 b : {ab, -ab}) {
        const i64 r = b * b - D;
        if (r % (4 * a)) continue;
        const i64 c = r / (4 * a);
        if (c % 3 == 0 && c != 0) return {a, b, c};
        if (ab == 0) break;
      }
    }
  }
}

}  // namespace gothic
