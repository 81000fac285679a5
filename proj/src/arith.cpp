#include "gothic/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gothic {

std::string to_string(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

i64 isqrt(i64 n) {
  if (n < 0) throw std::domain_error("isqrt of negative number");
  i64 r = static_cast<i64>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square(i64 n) {
  if (n < 0) return false;
  i64 r = isqrt(n);
  return r * r == n;
}

i64 gcd(i64 a, i64 b) { return std::gcd(a, b); }

std::vector<std::pair<i64, int>> factor(i64 n) {
  if (n <= 0) throw std::domain_error("factor: n must be positive");
  std::vector<std::pair<i64, int>> out;
  for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<i64> divisors(i64 n) {
  std::vector<i64> ds{1};
  for (auto [p, e] : factor(n)) {
    std::size_t cur = ds.size();
    i64 pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < cur; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

i64 sigma1(i64 n) {
  if (n <= 0) throw std::domain_error("sigma1: n must be positive");
  i64 s = 1;
  for (auto [p, e] : factor(n)) {
    i64 t = 1, pk = 1;
    for (int k = 0; k < e; ++k) {
      pk *= p;
      t += pk;
    }
    s *= t;
  }
  return s;
}

int moebius(i64 n) {
  if (n <= 0) throw std::domain_error("moebius: n must be positive");
  int m = 1;
  for (auto [p, e] : factor(n)) {
    if (e > 1) return 0;
    m = -m;
  }
  return m;
}

i64 squarefree_part(i64 n) {
  if (n == 0) throw std::domain_error("squarefree_part of zero");
  i64 s = 1;
  for (auto [p, e] : factor(n < 0 ? -n : n))
    if (e % 2) s *= p;
  return s;
}

namespace {

int jacobi(i64 a, i64 n) {  // n odd positive
  a %= n;
  if (a < 0) a += n;
  int t = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      i64 r = n % 8;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

}  // namespace

int kronecker(i64 D, i64 n) {
  if (n <= 0) throw std::domain_error("kronecker: n must be positive");
  int res = 1;
  while (n % 2 == 0) {
    n /= 2;
    i64 r = ((D % 8) + 8) % 8;
    if (r % 2 == 0) return 0;
    if (r == 3 || r == 5) res = -res;
  }
  if (n == 1) return res;
  return res * jacobi(D, n);
}

Sigma1Table::Sigma1Table(i64 N) : s_(static_cast<std::size_t>(N < 1 ? 2 : N + 1), 0) {
  i64 M = static_cast<i64>(s_.size()) - 1;
  for (i64 d = 1; d <= M; ++d)
    for (i64 m = d; m <= M; m += d) s_[static_cast<std::size_t>(m)] += d;
}

i64 Sigma1Table::operator()(i64 n) const {
  if (n <= 0) throw std::domain_error("sigma1: n must be positive");
  if (n < static_cast<i64>(s_.size())) return s_[static_cast<std::size_t>(n)];
  return sigma1(n);
}

namespace {

bool squarefree(i64 n) {
  for (auto [p, e] : factor(n))
    if (e > 1) return false;
  return true;
}

}  // namespace

bool is_fundamental(i64 D) {
  if (D <= 1 || is_square(D)) return false;
  if (D % 4 == 1) return squarefree(D);
  if (D % 4 != 0) return false;
  i64 m = D / 4;
  return (m % 4 == 2 || m % 4 == 3) && squarefree(m);
}

bool is_discriminant(i64 D) { return D > 0 && (D % 4 == 0 || D % 4 == 1) && !is_square(D); }

Discriminant split_discriminant(i64 D) {
  if (D <= 0) throw std::invalid_argument("discriminant must be positive");
  if (D % 4 == 2 || D % 4 == 3) throw std::invalid_argument("discriminant must be 0 or 1 mod 4");
  if (is_square(D)) throw std::invalid_argument("discriminant must not be a square");
  // largest f with D/f^2 a discriminant; that quotient is fundamental
  i64 f = 1;
  for (auto [p, e] : factor(D)) {
    for (int k = e / 2; k > 0; --k) {
      i64 pk = 1;
      for (int i = 0; i < k; ++i) pk *= p;
      i64 q = D / (f * f * pk * pk);
      if (q % 4 == 0 || q % 4 == 1) {
        f *= pk;
        break;
      }
    }
  }
  Discriminant r{D, D / (f * f), f};
  if (!is_fundamental(r.D0)) throw std::logic_error("split_discriminant: non-fundamental quotient");
  return r;
}

int sign_of(const Rat& p, const Rat& q, i64 d) {
  int sp = sgn(p), sq = sgn(q);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // opposite signs: compare p^2 and q^2 d
  Rat lhs = p * p, rhs = q * q * Rat(static_cast<long>(d));
  int c = cmp(lhs, rhs);
  if (c == 0) return 0;
  return c > 0 ? sp : sq;
}

QuadElem::QuadElem(i64 d, Rat p, Rat q) : d_(d), p_(std::move(p)), q_(std::move(q)) {
  p_.canonicalize();
  q_.canonicalize();
  if (sgn(q_) != 0 && (d_ <= 0 || is_square(d_)))
    throw std::invalid_argument("QuadElem: irrational part needs a non-square d > 0");
}

void QuadElem::adopt(const QuadElem& o) {
  if (o.is_rational()) return;
  if (is_rational()) {
    if (d_ == 0 || d_ == o.d_) {
      d_ = o.d_;
      return;
    }
  }
  if (d_ != o.d_) throw std::invalid_argument("QuadElem: mismatched discriminants");
}

QuadElem QuadElem::conj() const { return QuadElem(d_, p_, -q_); }
Rat QuadElem::trace() const { return 2 * p_; }
Rat QuadElem::norm() const { return p_ * p_ - q_ * q_ * Rat(static_cast<long>(d_)); }

int QuadElem::sign(int place) const { return sign_of(p_, place == 0 ? q_ : Rat(-q_), d_); }

Real QuadElem::embed(int place, unsigned digits) const {
  PrecisionGuard g(digits);
  Real s = boost::multiprecision::sqrt(Real(static_cast<long>(d_)));
  Real pp(p_.get_mpq_t()), qq(q_.get_mpq_t());
  return place == 0 ? Real(pp + qq * s) : Real(pp - qq * s);
}

double QuadElem::to_double(int place) const {
  double s = std::sqrt(static_cast<double>(d_));
  double qq = q_.get_d();
  return p_.get_d() + (place == 0 ? qq : -qq) * s;
}

QuadElem& QuadElem::operator+=(const QuadElem& o) {
  adopt(o);
  p_ += o.p_;
  q_ += o.q_;
  return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
  adopt(o);
  p_ -= o.p_;
  q_ -= o.q_;
  return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o) {
  adopt(o);
  if (o.is_rational()) {
    p_ *= o.p_;
    q_ *= o.p_;
    return *this;
  }
  if (is_rational()) {
    q_ = p_ * o.q_;
    p_ *= o.p_;
    return *this;
  }
  Rat np = p_ * o.p_ + q_ * o.q_ * Rat(static_cast<long>(d_));
  q_ = p_ * o.q_ + q_ * o.p_;
  p_ = std::move(np);
  return *this;
}

QuadElem& QuadElem::operator/=(const QuadElem& o) {
  if (o.is_zero()) throw std::domain_error("QuadElem: division by zero");
  adopt(o);
  Rat n = o.norm();
  QuadElem c = o.conj();
  *this *= c;
  p_ /= n;
  q_ /= n;
  return *this;
}

QuadElem QuadElem::operator-() const { return QuadElem(d_, -p_, -q_); }

std::string QuadElem::str() const {
  if (is_rational()) return to_string(p_);
  std::string s;
  if (sgn(p_) != 0) s = to_string(p_) + (sgn(q_) > 0 ? "+" : "");
  return s + to_string(q_) + "*sqrt(" + std::to_string(d_) + ")";
}

}  // namespace gothic
