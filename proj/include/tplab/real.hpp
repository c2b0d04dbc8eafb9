#pragma once

#include <mpfr.h>

#include <cstdint>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace tplab {

// Arbitrary-precision real on top of mpfr_t.  Every value carries its own
// precision; binary operations allocate the result at the wider of the two
// operand precisions and round to nearest-even.  With a fixed precision the
// whole stack is deterministic bit for bit, which the CLI relies on.
class Real {
  struct PrecTag {};
  Real(PrecTag, mpfr_prec_t prec) {
    mpfr_init2(v_, prec < MPFR_PREC_MIN ? MPFR_PREC_MIN : prec);
    mpfr_set_zero(v_, 1);
  }

 public:
  Real() { mpfr_init2(v_, default_prec()); mpfr_set_zero(v_, 1); }
  // Zero carried at an explicit precision.  A constructor can't serve here:
  // mpfr_prec_t is long, so it would collide with the value constructor below.
  static Real zero(mpfr_prec_t prec) { return Real(PrecTag{}, prec); }
  Real(double d) { mpfr_init2(v_, default_prec()); mpfr_set_d(v_, d, MPFR_RNDN); }
  Real(int i) { mpfr_init2(v_, default_prec()); mpfr_set_si(v_, i, MPFR_RNDN); }
  Real(long i) { mpfr_init2(v_, default_prec()); mpfr_set_si(v_, i, MPFR_RNDN); }
  Real(unsigned long u) { mpfr_init2(v_, default_prec()); mpfr_set_ui(v_, u, MPFR_RNDN); }
  Real(const mpz_class& z) {
    mpfr_init2(v_, default_prec());
    mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
  }
  Real(const mpz_class& z, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
  }
  Real(double d, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, d, MPFR_RNDN); }

  Real(const Real& o) {
    mpfr_init2(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, o.prec());
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  // Process-wide default used by the value constructors above.  The CLI and
  // the tests set this once at startup; library code that needs more bits
  // builds values with an explicit precision instead of touching this.
  static mpfr_prec_t default_prec();
  static void set_default_prec(mpfr_prec_t p);

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  Real at_prec(mpfr_prec_t p) const {
    Real r = zero(p);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  // Decimal string with enough digits to round-trip at this precision, plus
  // a hex-float form (exact) for replay; both used by the CLI serializers.
  std::string dec(int digits10 = 0) const;
  std::string hex() const;

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

 private:
  mpfr_t v_;
};

inline mpfr_prec_t wider(const Real& a, const Real& b) {
  return a.prec() > b.prec() ? a.prec() : b.prec();
}

// --- arithmetic -------------------------------------------------------------

inline Real operator+(const Real& a, const Real& b) {
  Real r = Real::zero(wider(a, b));
  mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline Real operator-(const Real& a, const Real& b) {
  Real r = Real::zero(wider(a, b));
  mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline Real operator*(const Real& a, const Real& b) {
  Real r = Real::zero(wider(a, b));
  mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline Real operator/(const Real& a, const Real& b) {
  Real r = Real::zero(wider(a, b));
  mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline Real operator-(const Real& a) {
  Real r = Real::zero(a.prec());
  mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

inline Real operator+(const Real& a, long b) {
  Real r = Real::zero(a.prec());
  mpfr_add_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
inline Real operator+(long a, const Real& b) { return b + a; }
inline Real operator-(const Real& a, long b) {
  Real r = Real::zero(a.prec());
  mpfr_sub_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
inline Real operator-(long a, const Real& b) {
  Real r = Real::zero(b.prec());
  mpfr_si_sub(r.raw(), a, b.raw(), MPFR_RNDN);
  return r;
}
inline Real operator*(const Real& a, long b) {
  Real r = Real::zero(a.prec());
  mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
inline Real operator*(long a, const Real& b) { return b * a; }
inline Real operator/(const Real& a, long b) {
  Real r = Real::zero(a.prec());
  mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
inline Real operator/(long a, const Real& b) {
  Real r = Real::zero(b.prec());
  mpfr_si_div(r.raw(), a, b.raw(), MPFR_RNDN);
  return r;
}
inline Real operator+(const Real& a, int b) { return a + long(b); }
inline Real operator+(int a, const Real& b) { return b + long(a); }
inline Real operator-(const Real& a, int b) { return a - long(b); }
inline Real operator-(int a, const Real& b) { return long(a) - b; }
inline Real operator*(const Real& a, int b) { return a * long(b); }
inline Real operator*(int a, const Real& b) { return b * long(a); }
inline Real operator/(const Real& a, int b) { return a / long(b); }
inline Real operator/(int a, const Real& b) { return long(a) / b; }

inline Real& operator+=(Real& a, const Real& b) { a = a + b; return a; }
inline Real& operator-=(Real& a, const Real& b) { a = a - b; return a; }
inline Real& operator*=(Real& a, const Real& b) { a = a * b; return a; }
inline Real& operator/=(Real& a, const Real& b) { a = a / b; return a; }

// --- comparisons ------------------------------------------------------------

inline bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.raw(), b.raw()) != 0; }
inline bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.raw(), b.raw()) != 0; }
inline bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.raw(), b.raw()) != 0; }
inline bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.raw(), b.raw()) != 0; }
inline bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
inline bool operator!=(const Real& a, const Real& b) { return !(a == b); }
inline bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) < 0; }
inline bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) > 0; }
inline bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) <= 0; }
inline bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) >= 0; }
inline bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) == 0; }
inline bool operator<(const Real& a, int b) { return a < long(b); }
inline bool operator>(const Real& a, int b) { return a > long(b); }
inline bool operator<=(const Real& a, int b) { return a <= long(b); }
inline bool operator>=(const Real& a, int b) { return a >= long(b); }
inline bool operator==(const Real& a, int b) { return a == long(b); }
inline bool operator<(const Real& a, double b) { return mpfr_cmp_d(a.raw(), b) < 0; }
inline bool operator>(const Real& a, double b) { return mpfr_cmp_d(a.raw(), b) > 0; }
inline bool operator<=(const Real& a, double b) { return mpfr_cmp_d(a.raw(), b) <= 0; }
inline bool operator>=(const Real& a, double b) { return mpfr_cmp_d(a.raw(), b) >= 0; }

// --- elementary functions ---------------------------------------------------

#define TPLAB_REAL_UNARY(name, mpfr_fn)        \
  inline Real name(const Real& a) {            \
    Real r = Real::zero(a.prec());                          \
    mpfr_fn(r.raw(), a.raw(), MPFR_RNDN);      \
    return r;                                  \
  }

TPLAB_REAL_UNARY(abs, mpfr_abs)
TPLAB_REAL_UNARY(sqrt, mpfr_sqrt)
TPLAB_REAL_UNARY(exp, mpfr_exp)
TPLAB_REAL_UNARY(log, mpfr_log)
TPLAB_REAL_UNARY(sin, mpfr_sin)
TPLAB_REAL_UNARY(cos, mpfr_cos)
TPLAB_REAL_UNARY(cosh, mpfr_cosh)
TPLAB_REAL_UNARY(sinh, mpfr_sinh)

#undef TPLAB_REAL_UNARY

// mpfr_floor is a macro over mpfr_rint, so it can't go through the table above.
inline Real floor(const Real& a) {
  Real r = Real::zero(a.prec());
  mpfr_rint(r.raw(), a.raw(), MPFR_RNDD);
  return r;
}

inline Real fmod(const Real& a, const Real& b) {
  Real r = Real::zero(wider(a, b));
  mpfr_fmod(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

// a^e for integer e (exact binary powering inside mpfr; e < 0 allowed).
inline Real pow_si(const Real& a, long e) {
  Real r = Real::zero(a.prec());
  mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN);
  return r;
}

inline Real ldexp(const Real& a, long e) {
  Real r = Real::zero(a.prec());
  mpfr_mul_2si(r.raw(), a.raw(), e, MPFR_RNDN);
  return r;
}

// 2^e at the given precision (exact).
inline Real two_pow(long e, mpfr_prec_t prec) {
  Real r = Real::zero(prec);
  mpfr_set_ui_2exp(r.raw(), 1, e, MPFR_RNDN);
  return r;
}

inline Real const_pi(mpfr_prec_t prec) {
  Real r = Real::zero(prec);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

inline const Real& max(const Real& a, const Real& b) { return a < b ? b : a; }
inline const Real& min(const Real& a, const Real& b) { return a < b ? a : b; }

}  // namespace tplab
