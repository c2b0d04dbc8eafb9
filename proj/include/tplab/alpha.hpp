#pragma once

#include "tplab/complexhp.hpp"
#include "tplab/real.hpp"

namespace tplab {

// Shape parameter of the kernel 1/(x^2 + 2cos(pi a)xy + y^2) together with
// the trig values everything downstream keeps reusing.  When the parameter
// is rational p/q the argument reduction for sin(k pi a / 2) is done in
// integers, so the degenerate zeros (k a /2 integral) are exact zeros --
// several closed forms vanish identically there and the tests rely on it.
class AlphaParam {
 public:
  static AlphaParam from_rational(long num, long den,
                                  mpfr_prec_t prec = Real::default_prec());
  static AlphaParam from_real(const Real& alpha, mpfr_prec_t prec);
  static AlphaParam from_double(double alpha,
                                mpfr_prec_t prec = Real::default_prec());

  const Real& alpha() const { return alpha_; }
  mpfr_prec_t precision_bits() const { return prec_; }
  bool is_rational() const { return rational_; }
  long num() const { return num_; }
  long den() const { return den_; }
  bool is_zero() const;

  const Real& cos_pi_alpha() const { return cos_pi_alpha_; }
  const Real& sin_pi_alpha() const { return sin_pi_alpha_; }
  const Complex& q() const { return q_; }          // e^{2 i pi a}
  const Complex& omega() const { return omega_; }  // e^{i pi a / 2}

  // sin(k pi a / 2) and cos(k pi a / 2); any integer k.
  Real sin_half(long k) const;
  Real cos_half(long k) const;
  // sin(k pi a), cos(k pi a).
  Real sin_pi_mult(long k) const { return sin_half(2 * k); }
  Real cos_pi_mult(long k) const { return cos_half(2 * k); }

  // Same parameter at a different working precision.
  AlphaParam at_prec(mpfr_prec_t prec) const;

  // Human-readable form for logs and JSON ("1/3" or a decimal).
  std::string describe() const;

 private:
  AlphaParam() = default;

  Real alpha_;
  bool rational_ = false;
  long num_ = 0, den_ = 1;
  mpfr_prec_t prec_ = 256;
  Real cos_pi_alpha_, sin_pi_alpha_;
  Complex q_, omega_;
};

}  // namespace tplab
