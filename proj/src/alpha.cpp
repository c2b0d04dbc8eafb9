#include "tplab/alpha.hpp"

#include <numeric>

#include "tplab/errors.hpp"

namespace tplab {

namespace {

// Reduce t into [0, 2) and return sin(pi t) (or cos) at precision prec,
// computed with 64 guard bits.
Real trig_pi_reduced(const Real& t, mpfr_prec_t prec, bool want_sin) {
  mpfr_prec_t gp = prec + 64;
  Real pi = const_pi(gp);
  Real arg = pi * t.at_prec(gp);
  Real r = want_sin ? sin(arg) : cos(arg);
  return r.at_prec(prec);
}

}  // namespace

AlphaParam AlphaParam::from_rational(long num, long den, mpfr_prec_t prec) {
  if (den == 0) throw domain_error("alpha: zero denominator");
  if (den < 0) { den = -den; num = -num; }
  long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) { num /= g; den /= g; }

  AlphaParam a;
  a.rational_ = true;
  a.num_ = num;
  a.den_ = den;
  a.prec_ = prec;
  a.alpha_ = Real(mpz_class(num), prec) / Real(mpz_class(den), prec);
  a.cos_pi_alpha_ = a.cos_half(2);
  a.sin_pi_alpha_ = a.sin_half(2);
  a.omega_ = Complex(a.cos_half(1), a.sin_half(1));
  a.q_ = Complex(a.cos_half(4), a.sin_half(4));
  return a;
}

AlphaParam AlphaParam::from_real(const Real& alpha, mpfr_prec_t prec) {
  AlphaParam a;
  a.rational_ = false;
  a.prec_ = prec;
  a.alpha_ = alpha.at_prec(prec);
  a.cos_pi_alpha_ = a.cos_half(2);
  a.sin_pi_alpha_ = a.sin_half(2);
  a.omega_ = Complex(a.cos_half(1), a.sin_half(1));
  a.q_ = Complex(a.cos_half(4), a.sin_half(4));
  return a;
}

AlphaParam AlphaParam::from_double(double alpha, mpfr_prec_t prec) {
  return from_real(Real(alpha, prec), prec);
}

AlphaParam AlphaParam::at_prec(mpfr_prec_t prec) const {
  if (rational_) return from_rational(num_, den_, prec);
  return from_real(alpha_, prec);
}

bool AlphaParam::is_zero() const {
  return rational_ ? num_ == 0 : alpha_.is_zero();
}

Real AlphaParam::sin_half(long k) const {
  if (rational_) {
    // k*num/(2*den) mod 2 == r/(2*den) with r = k*num mod 4*den in [0, 4*den).
    mpz_class r = mpz_class(k) * num_;
    mpz_class m = 4 * mpz_class(den_);
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
    long q2 = 2 * den_;
    if (r == 0 || r == q2) return Real(0l).at_prec(prec_);
    if (r == den_) return Real(1l).at_prec(prec_);
    if (r == 3 * mpz_class(den_)) return Real(-1l).at_prec(prec_);
    Real t = Real(r, prec_ + 64) / Real(mpz_class(q2), prec_ + 64);
    return trig_pi_reduced(t, prec_, true);
  }
  mpfr_prec_t gp = prec_ + 64;
  Real t = alpha_.at_prec(gp) * k / 2;
  t = fmod(t, Real(2l).at_prec(gp));
  if (t.sign() < 0) t += Real(2l).at_prec(gp);
  return trig_pi_reduced(t, prec_, true);
}

Real AlphaParam::cos_half(long k) const {
  if (rational_) {
    mpz_class r = mpz_class(k) * num_;
    mpz_class m = 4 * mpz_class(den_);
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
    long q2 = 2 * den_;
    if (r == 0) return Real(1l).at_prec(prec_);
    if (r == q2) return Real(-1l).at_prec(prec_);
    if (r == den_ || r == 3 * mpz_class(den_)) return Real(0l).at_prec(prec_);
    Real t = Real(r, prec_ + 64) / Real(mpz_class(q2), prec_ + 64);
    return trig_pi_reduced(t, prec_, false);
  }
  mpfr_prec_t gp = prec_ + 64;
  Real t = alpha_.at_prec(gp) * k / 2;
  t = fmod(t, Real(2l).at_prec(gp));
  if (t.sign() < 0) t += Real(2l).at_prec(gp);
  return trig_pi_reduced(t, prec_, false);
}

std::string AlphaParam::describe() const {
  if (rational_) return std::to_string(num_) + "/" + std::to_string(den_);
  return alpha_.dec(20);
}

}  // namespace tplab
