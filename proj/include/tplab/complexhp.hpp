#pragma once

#include "tplab/real.hpp"

namespace tplab {

// Minimal complex type over Real; just the operations the determinant
// evaluations and the six-vertex sums need.
struct Complex {
  Real re, im;

  Complex() = default;
  Complex(const Real& r) : re(r), im(Real::zero(r.prec())) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(double r, double i = 0.0) : re(r), im(i) {}
  explicit Complex(mpfr_prec_t prec) : re(Real::zero(prec)), im(Real::zero(prec)) {}

  mpfr_prec_t prec() const { return re.prec() > im.prec() ? re.prec() : im.prec(); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

inline Complex operator+(const Complex& a, const Complex& b) {
  return {a.re + b.re, a.im + b.im};
}
inline Complex operator-(const Complex& a, const Complex& b) {
  return {a.re - b.re, a.im - b.im};
}
inline Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
inline Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Complex operator*(const Complex& a, const Real& s) { return {a.re * s, a.im * s}; }
inline Complex operator*(const Real& s, const Complex& a) { return a * s; }
inline Complex conj(const Complex& a) { return {a.re, -a.im}; }
inline Real norm2(const Complex& a) { return a.re * a.re + a.im * a.im; }
inline Real abs(const Complex& a) { return sqrt(norm2(a)); }

inline Complex operator/(const Complex& a, const Complex& b) {
  Real n = norm2(b);
  Complex t = a * conj(b);
  return {t.re / n, t.im / n};
}
inline Complex operator/(const Complex& a, const Real& s) { return {a.re / s, a.im / s}; }

inline Complex& operator+=(Complex& a, const Complex& b) { a = a + b; return a; }
inline Complex& operator-=(Complex& a, const Complex& b) { a = a - b; return a; }
inline Complex& operator*=(Complex& a, const Complex& b) { a = a * b; return a; }

// z^e for integer e (binary powering; e < 0 inverts first).
inline Complex pow_si(const Complex& z, long e) {
  mpfr_prec_t p = z.prec();
  Complex base = z;
  unsigned long n;
  if (e < 0) {
    base = Complex(Real(1l).at_prec(p)) / z;
    n = static_cast<unsigned long>(-e);
  } else {
    n = static_cast<unsigned long>(e);
  }
  Complex acc(Real(1l).at_prec(p), Real(0l).at_prec(p));
  while (n) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

}  // namespace tplab
