#pragma once

#include <map>
#include <vector>

#include "gothic/arith.hpp"
#include "gothic/mp.hpp"

namespace gothic {

// one-variable series, exponents in (1/24)Z
struct OneVarSeries {
  std::map<Rat, Rat> terms;
  Rat bound;

  Rat coeff(const Rat& e) const {
    auto it = terms.find(e);
    return it == terms.end() ? Rat(0) : it->second;
  }
};

OneVarSeries series_mul(const OneVarSeries& a, const OneVarSeries& b);

// weakly multiplicative Gauss sum gamma_c(D), from the prime-power table
Rat gauss_gamma(i64 D, i64 c);

Rat e_star(i64 D, i64 k, i64 Cmax);                                  // exact, small Cmax
Real e_star_real(i64 D, i64 k, i64 Cmax, unsigned digits = 30);      // float sum, large Cmax

Rat ratio_closed_form(i64 D, i64 k);

// pi^2/72, the constant in e_bar
Real e_bar_constant(unsigned digits);
Real e_bar(i64 n, i64 k, i64 Cmax, unsigned digits = 60);

// L(2, chi_D) by direct summation
Real L2_chi(i64 D, i64 terms, unsigned digits = 30);

bool eta_check(i64 D);

// G_2(2k tau) theta(tau) in the grading e^{pi i n tau}
OneVarSeries series_e(i64 nmax, i64 k);

Rat eta_e2_coefficient(i64 D);

// predicted limit of e(D,6)/e(D,1) by residue class of D mod 24
Rat predicted_ratio(i64 residue);

struct AsymptRow {
  i64 D = 0;
  i64 residue = 0;
  double ratio = 0;
  double predicted = 0;
  double rel_err = 0;
};

std::vector<AsymptRow> asymptotic_scan(i64 dmin, i64 dmax, int residue = -1);

}  // namespace gothic
