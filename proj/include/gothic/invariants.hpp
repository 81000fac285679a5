#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gothic/arith.hpp"

namespace gothic {

struct InvariantRow {
  i64 D = 0;
  int k = 0;
  Rat chi_X;
  Rat chi_Red;
  Rat chi_G;
  std::optional<Rat> lambda_P;  // absent when G_D is empty
  std::string flags;
};

// Siegel: (1/60) sum over |b| < sqrt D0, b^2 = D0 mod 4 of sigma_1((D0 - b^2)/4)
Rat zeta_K_minus1(i64 D0);

// 2 f^3 zeta_{D0}(-1) sum_{r | f} (D0/r) mu(r)/r^2
Rat chi_XD_mobius(i64 D);
// (1/30) sum_{P_1(D)} a
Rat chi_XD_prototypes(i64 D);
// both routes; throws std::runtime_error on mismatch
Rat chi_XD(i64 D);

Rat kappa(i64 D);
Rat chi_XDb(i64 D);
Rat chi_Red23(i64 D);
Rat chi_GDb(i64 D);
Rat lambda_P(i64 D);

// per-residue closed forms of the volume theorem, independent of chi_GDb
Rat chi_GDb_by_residue(i64 D);

InvariantRow invariant_row(i64 D);
std::vector<InvariantRow> table(i64 Dmax);

}  // namespace gothic
