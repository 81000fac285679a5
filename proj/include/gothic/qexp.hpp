#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gothic/arith.hpp"
#include "gothic/mp.hpp"
#include "gothic/prototypes.hpp"

namespace gothic {

// element of Q(sqrt D)[zeta]/(zeta^4 - zeta^2 + 1), zeta = exp(pi i/6)
class CycQuad {
public:
  CycQuad() = default;
  explicit CycQuad(const QuadElem& c0) { c_[0] = c0; }
  static CycQuad zeta_pow(int k);  // zeta^k, any integer k

  const QuadElem& operator[](int r) const { return c_[static_cast<std::size_t>(r)]; }
  QuadElem& operator[](int r) { return c_[static_cast<std::size_t>(r)]; }

  bool is_zero() const;

  CycQuad& operator+=(const CycQuad& o);
  CycQuad& operator-=(const CycQuad& o);
  CycQuad& operator*=(const CycQuad& o);
  CycQuad& operator*=(const QuadElem& s);
  CycQuad operator-() const;
  friend CycQuad operator+(CycQuad a, const CycQuad& b) { return a += b; }
  friend CycQuad operator-(CycQuad a, const CycQuad& b) { return a -= b; }
  friend CycQuad operator*(CycQuad a, const CycQuad& b) { return a *= b; }
  friend CycQuad operator*(CycQuad a, const QuadElem& s) { return a *= s; }
  friend bool operator==(const CycQuad& a, const CycQuad& b) { return (a - b).is_zero(); }

  // image in C: sqrt D -> +-sqrt D by place, zeta -> exp(pi i/6)
  Complex embed(int place, unsigned digits) const;

  std::string str() const;

private:
  std::array<QuadElem, 4> c_{};
};

// solves a = s * b for s; nullopt when b is a zero divisor without solution
std::optional<CycQuad> cyc_divide(const CycQuad& a, const CycQuad& b);

// 2^pow2 * pi^pow_pi * i^pow_i
struct Prefactor {
  int pow2 = 0;
  int pow_pi = 0;
  int pow_i = 0;
  Prefactor times(const Prefactor& o) const {
    return {pow2 + o.pow2, pow_pi + o.pow_pi, ((pow_i + o.pow_i) % 4 + 4) % 4};
  }
  friend bool operator==(const Prefactor&, const Prefactor&) = default;
  Complex value(unsigned digits) const;
};

struct HilbertSeries {
  i64 D = 0;
  Form Q;
  Prefactor prefactor;
  std::map<QuadElem, CycQuad> terms;  // exponent nu -> coefficient, no zero entries
  Rat bound;

  void add_term(const QuadElem& nu, const CycQuad& c);
  std::size_t size() const { return terms.size(); }
};

struct RationalSeries {
  std::map<Rat, CycQuad> terms;
  Prefactor prefactor;
  Rat bound;

  bool is_zero() const { return terms.empty(); }
};

// lattice coset Z^2 + (eps, delta)
struct Coset {
  Rat eps, delta;
};

// cosets making up theta_j in the (2,3) convention; j = 1, 2 combine the characteristics j/6 and -j/6
std::vector<Coset> theta_cosets(int j);

struct LatticeTerm {
  Rat x1, x2;
  QuadElem nu;  // rho(x)^2
  CycQuad coeff;
};

// every x in the coset with tr(rho(x)^2) <= bound, rho(x) = x1 + x2 lambda_Q
std::vector<std::pair<Rat, Rat>> coset_points(i64 D, const Form& Q, const Coset& c, const Rat& bound);

std::vector<LatticeTerm> nullwert_terms(i64 D, const Form& Q, int j, int axis, const Rat& bound);

HilbertSeries theta_deriv_nullwert(i64 D, const Form& Q, int j, int axis, const Rat& bound);

HilbertSeries series_add(const HilbertSeries& a, const HilbertSeries& b);
HilbertSeries series_sub(const HilbertSeries& a, const HilbertSeries& b);
HilbertSeries series_mul(const HilbertSeries& a, const HilbertSeries& b);

HilbertSeries gothic_form(i64 D, const Form& Q, const Rat& bound);
HilbertSeries gothic_direct(i64 D, const Form& Q, const Rat& bound);
HilbertSeries F_ab(i64 D, const Form& Q, const Rat& bound, char which);

HilbertSeries tau_derivative(const HilbertSeries& s, int axis);

// restriction to F_P; keeps exponents t <= bound * min(alpha, alpha^sigma), where the input is complete
RationalSeries restrict_series(const HilbertSeries& s, i64 D, const RmPrototype& P);

struct NumericValue {
  Complex value;
  Real max_term;
  Real tail;
};

NumericValue numeric_eval(const HilbertSeries& s, const Complex& tau1, const Complex& tau2, unsigned digits,
                          int place = 0);

// a = scalar * b termwise (same support)
std::optional<CycQuad> solve_global_scalar(const HilbertSeries& a, const HilbertSeries& b);

nlohmann::json to_json(const HilbertSeries& s);
nlohmann::json to_json(const RationalSeries& s);
nlohmann::json to_json(const CycQuad& c);

}  // namespace gothic
