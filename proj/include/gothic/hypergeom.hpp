#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gothic/arith.hpp"
#include "gothic/mp.hpp"
#include "gothic/prototypes.hpp"

namespace gothic {

using RatSeries = std::vector<Rat>;
using RealSeries = std::vector<Real>;

// F(a, b; 1; t) and the logarithmic partner, c = 1
RatSeries y1_series(const Rat& a, const Rat& b, int N);
RatSeries y2_series(const Rat& a, const Rat& b, int N);

// Q(t) = t exp(y2/y1)
RatSeries q_map_series(const Rat& a, const Rat& b, int N);

// reversion of a series with zero constant term and unit linear term
RatSeries series_reversion(const RatSeries& f, int N);

// residuals of the hypergeometric equation on y1 and on y1 log t + y2, coefficients below t^{N-1}
std::pair<RatSeries, RatSeries> ode_residuals(const Rat& a, const Rat& b, int N);

struct ConstantResult {
  Real value;          // A or A-tilde
  Real closed;         // closed form
  Real abs_err;
  Real limit;          // Q_0 = lim b_n / b_{n+1}
  std::vector<Real> ratio_deltas;
  bool geometric = false;
  int N = 0;
};

// (2 + sqrt3)^{-6 -+ sqrt3} (1 + sqrt3)^9 (3 + sqrt3)^3, place 0 gives A
Real closed_A(int place, unsigned digits);

unsigned working_digits(unsigned digits, int N);

// expand 1/(t(Q) - 1)^{1/3} and extract the singularity; place 0 uses L(5/12, 1/4), place 1 uses L(1/4, 1/12)
ConstantResult constant_A(int place, unsigned digits, int N);

struct PhiExpansion {
  QuadElem slope;            // alpha^sigma / alpha
  Complex constant;          // (alpha^sigma / 2 pi i) log(A / A~)
  Complex constant_closed;    // -(2 (1 - sqrt3) / pi i) log(2 + sqrt3)
  Complex prefactor;         // alpha^sigma / 2 pi i
  Real A, Atilde;
  RealSeries r;              // phi = slope tau + constant + prefactor sum r_n (A q)^n, q = e(2 tau/alpha)
  unsigned digits = 0;
};

// exact coefficients of (y~2/y~1 - y2/y1) o t(Q) in powers of Q, n = 1..count
RatSeries phi_exact_coeffs(int count);

PhiExpansion phi_expansion(int N, unsigned digits);

Complex phi_eval(const PhiExpansion& ph, const Complex& tau);

// (tau, C^sigma phi(C^{-1} tau))
std::pair<Complex, Complex> embed_point(const PhiExpansion& ph, const Complex& tau);

struct G12Convention {
  Form Q;
  int sign = 1;          // sqrt D -> sign * sqrt 12 in lambda_Q
  bool swap = false;     // exchange tau1 and tau2
  QuadElem t;            // <1, lambda_Q> = t O^vee; coordinates scaled by t^-2 (t = 1: no scaling)
  std::string str() const;
};

struct G12Value {
  double residual = 0;   // |G| / largest product of term magnitudes
  double value = 0;
};

G12Value g12_evaluate(const G12Convention& c, const Complex& tau1, const Complex& tau2, unsigned digits = 30);

struct G12Search {
  G12Convention best;
  std::vector<double> best_residuals;
  std::vector<std::pair<G12Convention, double>> log;  // every convention with its worst residual
};

std::vector<G12Convention> g12_conventions();

G12Search g12_search(const std::vector<std::pair<Complex, Complex>>& points, unsigned digits = 30);

}  // namespace gothic
