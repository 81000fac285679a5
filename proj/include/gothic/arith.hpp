#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "gothic/mp.hpp"

namespace gothic {

using i64 = std::int64_t;
using Rat = mpq_class;
using Int = mpz_class;

// p/q in lowest terms; mpq_class(p, q) alone does not reduce
inline Rat frac(i64 p, i64 q) {
  Rat r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r);  // "p/q", or "p" when q = 1

i64 isqrt(i64 n);
bool is_square(i64 n);
i64 gcd(i64 a, i64 b);

std::vector<std::pair<i64, int>> factor(i64 n);
std::vector<i64> divisors(i64 n);

i64 sigma1(i64 n);
int moebius(i64 n);
i64 squarefree_part(i64 n);
int kronecker(i64 D, i64 n);

// Sigma_1 for all n <= N by sieve.
class Sigma1Table {
public:
  explicit Sigma1Table(i64 N);
  i64 operator()(i64 n) const;
  i64 limit() const { return static_cast<i64>(s_.size()) - 1; }

private:
  std::vector<i64> s_;
};

struct Discriminant {
  i64 D = 0;
  i64 D0 = 0;
  i64 f = 0;
};

bool is_fundamental(i64 D);
bool is_discriminant(i64 D);  // positive, 0/1 mod 4, non-square
Discriminant split_discriminant(i64 D);

// p + q sqrt(d), exact.
class QuadElem {
public:
  QuadElem() = default;
  QuadElem(i64 d, Rat p, Rat q = Rat(0));
  static QuadElem rational(Rat p) { return QuadElem(0, std::move(p), Rat(0)); }
  static QuadElem sqrt_d(i64 d) { return QuadElem(d, Rat(0), Rat(1)); }

  i64 d() const { return d_; }
  const Rat& p() const { return p_; }
  const Rat& q() const { return q_; }

  bool is_zero() const { return sgn(p_) == 0 && sgn(q_) == 0; }
  bool is_rational() const { return sgn(q_) == 0; }

  QuadElem conj() const;
  Rat trace() const;
  Rat norm() const;

  // exact sign of the image under the first (place=0, +sqrt d) or second embedding
  int sign(int place = 0) const;
  bool totally_positive() const { return sign(0) > 0 && sign(1) > 0; }

  Real embed(int place, unsigned digits) const;
  double to_double(int place = 0) const;

  QuadElem& operator+=(const QuadElem& o);
  QuadElem& operator-=(const QuadElem& o);
  QuadElem& operator*=(const QuadElem& o);
  QuadElem& operator/=(const QuadElem& o);
  QuadElem operator-() const;

  friend QuadElem operator+(QuadElem a, const QuadElem& b) { return a += b; }
  friend QuadElem operator-(QuadElem a, const QuadElem& b) { return a -= b; }
  friend QuadElem operator*(QuadElem a, const QuadElem& b) { return a *= b; }
  friend QuadElem operator/(QuadElem a, const QuadElem& b) { return a /= b; }
  friend bool operator==(const QuadElem& a, const QuadElem& b) {
    return a.p_ == b.p_ && a.q_ == b.q_ && (a.is_rational() || a.d_ == b.d_);
  }
  friend bool operator!=(const QuadElem& a, const QuadElem& b) { return !(a == b); }

  // order by (p, q), used for map keys
  friend bool operator<(const QuadElem& a, const QuadElem& b) {
    int c = cmp(a.p_, b.p_);
    if (c != 0) return c < 0;
    return a.q_ < b.q_;
  }

  std::string str() const;

private:
  void adopt(const QuadElem& o);

  i64 d_ = 0;
  Rat p_{0};
  Rat q_{0};
};

// sign of p + q sqrt(d)
int sign_of(const Rat& p, const Rat& q, i64 d);

}  // namespace gothic
