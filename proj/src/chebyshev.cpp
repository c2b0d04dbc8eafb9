#include "tplab/chebyshev.hpp"

#include "tplab/errors.hpp"

namespace tplab {

Real cheb_u(const AlphaParam& a, long k) {
  mpfr_prec_t prec = a.precision_bits();
  if (k < 0) return -cheb_u(a, -k);
  if (k == 0) return Real(0l).at_prec(prec);
  if (a.sin_pi_alpha().is_zero()) {
    // a integral: sin(k pi a)/sin(pi a) -> k * (-1)^{a(k+1)}.
    long m = a.is_rational() ? a.num() : a.alpha().to_long();
    bool flip = (m & 1) && (k % 2 == 0);
    return Real(flip ? -k : k).at_prec(prec);
  }
  return a.sin_pi_mult(k) / a.sin_pi_alpha();
}

Real cheb_u_recurrence(const AlphaParam& a, long k) {
  if (k < 0) throw domain_error("cheb_u_recurrence: negative index");
  mpfr_prec_t prec = a.precision_bits();
  Real prev = Real(0l).at_prec(prec);  // U_0
  if (k == 0) return prev;
  Real cur = Real(1l).at_prec(prec);  // U_1
  const Real& c = a.cos_pi_alpha();
  for (long i = 1; i < k; ++i) {
    Real next = 2 * c * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Real v_product(const AlphaParam& a, int n) {
  Real p = Real(1l).at_prec(a.precision_bits());
  for (int j = 2; j <= n; ++j) p *= cheb_u(a, j);
  return p;
}

Complex q_factorial(const Complex& q, int n) {
  if (n < 0) throw domain_error("q_factorial: negative n");
  mpfr_prec_t prec = q.prec();
  Complex one(Real(1l).at_prec(prec), Real(0l).at_prec(prec));
  Complex diff = one - q;
  if (diff.is_zero()) {
    // q -> 1 limit: each factor (1-q^j)/(1-q) -> j.
    Complex r = one;
    for (int j = 2; j <= n; ++j) r = r * Real(long(j)).at_prec(prec);
    return r;
  }
  Complex r = one;
  Complex qpow = q;
  for (int j = 1; j <= n; ++j) {
    r = r * ((one - qpow) / diff);
    qpow = qpow * q;
  }
  return r;
}

}  // namespace tplab
