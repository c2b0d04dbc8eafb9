#pragma once

#include <cstdint>
#include <vector>

#include "tplab/bigint.hpp"
#include "tplab/errors.hpp"
#include "tplab/real.hpp"

namespace tplab {

struct Extrapolated {
  Real value;
  Real error;  // conservative: 4x the last two Neville increments
};

// Neville table for v_l = v(h_l) with h_l = h_0 / ratio^l and an error
// expansion in powers of h^step.  The error estimate is deliberately padded:
// downstream code promises |value - limit| <= error and tests hold it to that.
inline Extrapolated richardson(const std::vector<Real>& v, const Real& ratio, int step) {
  const int L = int(v.size());
  if (L == 0) throw domain_error("richardson: empty ladder");
  std::vector<Real> row = v;
  Real last_inc = abs(row[L - 1]) + Real(1l);  // placeholder when L == 1
  std::vector<Real> prev;
  for (int m = 1; m < L; ++m) {
    Real f = pow_si(ratio, long(m) * step);
    prev = row;
    // walk down so row[l-1] is still the previous column's entry
    for (int l = L - 1; l >= m; --l)
      row[l] = row[l] + (row[l] - row[l - 1]) / (f - 1);
    last_inc = abs(row[L - 1] - prev[L - 1]);
  }
  Real err = last_inc * 4;
  if (L >= 3) err = err + abs(row[L - 1] - row[L - 2]) * 4;
  return {row[L - 1], err};
}

// order-th derivative of f at x by a central stencil with Richardson
// extrapolation over h_l = 2^(h0_exp - ratio_exp*l), l = 0..levels-1.
// Offsets are (order/2 - m) h, so odd orders use half-integer steps; either
// way the error expansion is in h^2.  Returns value and padded error bound.
template <class F>
Extrapolated deriv_extrapolated(F f, const Real& x, int order, mpfr_prec_t work_prec,
                                long h0_exp, int levels, long ratio_exp) {
  std::vector<Real> ladder;
  ladder.reserve(size_t(levels));
  for (int l = 0; l < levels; ++l) {
    Real h = two_pow(h0_exp - ratio_exp * l, work_prec);
    Real acc = Real::zero(work_prec);
    for (int m = 0; m <= order; ++m) {
      Real off = h * (order - 2 * m) / 2;
      Real term = f(x.at_prec(work_prec) + off) * Real(binomial(order, m), work_prec);
      if (m & 1) acc -= term; else acc += term;
    }
    ladder.push_back(acc / pow_si(h, order));
  }
  return richardson(ladder, two_pow(ratio_exp, work_prec), 2);
}

// Adaptive Simpson quadrature with absolute tolerance on each subinterval.
namespace detail {
inline Real simpson(const Real& a, const Real& fa, const Real& b, const Real& fb,
                    const Real& fm) {
  return (b - a) / 6 * (fa + 4 * fm + fb);
}

template <class F>
Real adaptive_step(F& f, const Real& a, const Real& fa, const Real& b, const Real& fb,
                   const Real& m, const Real& fm, const Real& whole, const Real& tol,
                   int depth) {
  Real lm = (a + m) / 2, rm = (m + b) / 2;
  Real flm = f(lm), frm = f(rm);
  Real left = simpson(a, fa, m, fm, flm);
  Real right = simpson(m, fm, b, fb, frm);
  Real delta = left + right - whole;
  if (depth <= 0) throw convergence_error("adaptive simpson: recursion depth exhausted");
  if (abs(delta) <= tol * 15) return left + right + delta / 15;
  Real half_tol = tol / 2;
  return adaptive_step(f, a, fa, m, fm, lm, flm, left, half_tol, depth - 1) +
         adaptive_step(f, m, fm, b, fb, rm, frm, right, half_tol, depth - 1);
}
}  // namespace detail

template <class F>
Real adaptive_simpson(F f, const Real& a, const Real& b, const Real& tol, int max_depth = 60) {
  Real fa = f(a), fb = f(b);
  Real m = (a + b) / 2;
  Real fm = f(m);
  Real whole = detail::simpson(a, fa, b, fb, fm);
  return detail::adaptive_step(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

// splitmix64: tiny, seedable, and good enough for sample-point generation.
// Scan code derives one independent stream per (seed, order, sample) so the
// draw for sample i never depends on how many draws earlier samples made.
struct SplitMix64 {
  uint64_t s;
  explicit SplitMix64(uint64_t seed) : s(seed) {}
  uint64_t next() {
    s += 0x9E3779B97F4A7C15ull;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  // uniform in [0,1) with 53 significand bits, exact dyadic at prec >= 53
  Real unit(mpfr_prec_t prec) {
    Real r = Real::zero(prec);
    mpfr_set_ui_2exp(r.raw(), next() >> 11, -53, MPFR_RNDN);
    return r;
  }
};

inline uint64_t mix_seed(uint64_t seed, uint64_t a, uint64_t b) {
  SplitMix64 g(seed ^ (a * 0xD1B54A32D192ED03ull) ^ (b * 0x8CB92BA72F3D8DD7ull));
  g.next();
  return g.next();
}

}  // namespace tplab
