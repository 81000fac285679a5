#include "gothic/invariants.hpp"

#include <stdexcept>

#include "gothic/prototypes.hpp"

namespace gothic {

Rat zeta_K_minus1(i64 D0) {
  if (!is_fundamental(D0)) throw std::invalid_argument("zeta_K_minus1 needs a fundamental discriminant");
  i64 s = 0;
  const i64 bmax = isqrt(D0);
  for (i64 b = -bmax; b <= bmax; ++b) {
    const i64 r = D0 - b * b;
    if (r > 0 && r % 4 == 0) s += sigma1(r / 4);
  }
  Rat z(s, 60);
  z.canonicalize();
  return z;
}

Rat chi_XD_mobius(i64 D) {
  const Discriminant d = split_discriminant(D);
  Rat corr(0);
  for (i64 r : divisors(d.f)) {
    int mu = moebius(r);
    if (mu == 0) continue;
    corr += frac(kronecker(d.D0, r) * mu, r * r);
  }
  Rat res = 2 * Rat(d.f * d.f * d.f) * zeta_K_minus1(d.D0) * corr;
  res.canonicalize();
  return res;
}

Rat chi_XD_prototypes(i64 D) {
  Rat r(prototype_sum(D, 1), 30);
  r.canonicalize();
  return r;
}

Rat chi_XD(i64 D) {
  Rat a = chi_XD_mobius(D);
  Rat b = chi_XD_prototypes(D);
  if (a != b)
    throw std::runtime_error("chi(X_D) mismatch at D=" + std::to_string(D) + ": " + to_string(a) + " vs " +
                             to_string(b));
  return a;
}

Rat kappa(i64 D) {
  switch (gcd(6, split_discriminant(D).f)) {
    case 1: return Rat(1);
    case 2: return Rat(3, 2);
    case 3: return Rat(4, 3);
    default: return Rat(2);
  }
}

namespace {

int ideal_count(i64 D) {
  const int k = static_cast<int>(norm6_ideals(D).size());
  if (k == 0) throw std::domain_error("no norm-6 ideal for D=" + std::to_string(D));
  return k;
}

}  // namespace

Rat chi_XDb(i64 D) {
  ideal_count(D);
  Rat r = kappa(D) * chi_XD(D);
  r.canonicalize();
  return r;
}

Rat chi_Red23(i64 D) {
  const int k = ideal_count(D);
  Rat r(-prototype_sum(D, 6), 6 * k);
  r.canonicalize();
  return r;
}

Rat chi_GDb(i64 D) {
  Rat r = Rat(-3, 2) * chi_XDb(D) - 2 * chi_Red23(D);
  r.canonicalize();
  return r;
}

Rat chi_GDb_by_residue(i64 D) {
  const int k = ideal_count(D);
  const Rat s1(prototype_sum(D, 1));
  const Rat s6(prototype_sum(D, 6));
  Rat r = -(Rat(1, 20) * kappa(D) * s1 - s6 / Rat(3 * k));
  r.canonicalize();
  return r;
}

Rat lambda_P(i64 D) {
  const Rat g = chi_GDb(D);
  if (sgn(g) == 0) throw std::domain_error("lambda_P: G_D is empty");
  Rat r = 1 + chi_XDb(D) / g;
  r.canonicalize();
  return r;
}

InvariantRow invariant_row(i64 D) {
  InvariantRow row;
  row.D = D;
  row.k = ideal_count(D);
  row.chi_X = chi_XDb(D);
  row.chi_Red = chi_Red23(D);
  row.chi_G = Rat(-3, 2) * row.chi_X - 2 * row.chi_Red;
  row.chi_G.canonicalize();
  if (sgn(row.chi_G) == 0) {
    row.flags = "empty";
  } else {
    Rat l = 1 + row.chi_X / row.chi_G;
    l.canonicalize();
    row.lambda_P = l;
  }
  return row;
}

std::vector<InvariantRow> table(i64 Dmax) {
  std::vector<InvariantRow> rows;
  for (i64 D = 12; D <= Dmax; ++D) {
    const i64 r = D % 24;
    if (r != 0 && r != 1 && r != 4 && r != 9 && r != 12 && r != 16) continue;
    if (is_square(D)) continue;
    rows.push_back(invariant_row(D));
  }
  return rows;
}

}  // namespace gothic
