#pragma once

#include <boost/multiprecision/mpfr.hpp>

namespace gothic {

using Real = boost::multiprecision::mpfr_float;

inline unsigned digits_to_bits(unsigned digits) { return digits * 3322u / 1000u + 16u; }

// Sets the default precision of newly created Real values for the lifetime of the guard.
class PrecisionGuard {
public:
  explicit PrecisionGuard(unsigned digits) : old_(Real::default_precision()) {
    Real::default_precision(digits);
  }
  ~PrecisionGuard() { Real::default_precision(old_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
  unsigned old_;
};

struct Complex {
  Real re, im;

  Complex() : re(0), im(0) {}
  Complex(Real r, Real i = Real(0)) : re(std::move(r)), im(std::move(i)) {}

  Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
  Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
  Complex& operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Complex& operator/=(const Complex& o) {
    Real den = o.re * o.re + o.im * o.im;
    Real r = (re * o.re + im * o.im) / den;
    im = (im * o.re - re * o.im) / den;
    re = std::move(r);
    return *this;
  }
  Complex operator-() const { return Complex(-re, -im); }
  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator*(Complex a, const Real& s) { a.re *= s; a.im *= s; return a; }
  friend Complex operator*(const Real& s, Complex a) { a.re *= s; a.im *= s; return a; }
};

inline Real abs(const Complex& z) { return boost::multiprecision::sqrt(z.re * z.re + z.im * z.im); }

inline Complex cexp(const Complex& z) {
  Real m = boost::multiprecision::exp(z.re);
  return Complex(m * boost::multiprecision::cos(z.im), m * boost::multiprecision::sin(z.im));
}

inline Complex clog(const Complex& z) {
  return Complex(boost::multiprecision::log(abs(z)), boost::multiprecision::atan2(z.im, z.re));
}

inline Real pi() {
  Real r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

}  // namespace gothic
