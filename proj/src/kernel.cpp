#include "tplab/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "tplab/errors.hpp"
#include "tplab/numeric.hpp"

namespace tplab {

PointTuple PointTuple::of(std::vector<Real> xs) {
  for (size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 0l)) throw domain_error("point tuple: entries must be > 0");
    if (i > 0 && !(xs[i - 1] < xs[i]))
      throw domain_error("point tuple: entries must be strictly increasing");
  }
  PointTuple t;
  t.v = std::move(xs);
  return t;
}

Real vandermonde(const PointTuple& x) {
  mpfr_prec_t prec = x.size() ? x[0].prec() : Real::default_prec();
  Real p = Real(1l).at_prec(prec);
  for (int i = 0; i < x.size(); ++i)
    for (int j = i + 1; j < x.size(); ++j) p *= x[j] - x[i];
  return p;
}

Real eval_kernel(const AlphaParam& a, const Real& x, const Real& y) {
  if (!(x > 0l) || !(y > 0l)) throw domain_error("eval_kernel: x, y must be > 0");
  Real q = x * x + 2 * a.cos_pi_alpha() * x * y + y * y;
  if (q.is_zero()) throw domain_error("eval_kernel: pole of the kernel");
  return 1l / q;
}

Real det_kernel_matrix(const AlphaParam& a, const PointTuple& x, const PointTuple& y) {
  if (x.size() != y.size()) throw domain_error("det_kernel_matrix: size mismatch");
  const int n = x.size();
  Mat<Real> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = eval_kernel(a, x[i], y[j]);
  return det(std::move(m));
}

std::pair<Real, Real> cauchy_check(const PointTuple& x, const PointTuple& y) {
  if (x.size() != y.size()) throw domain_error("cauchy_check: size mismatch");
  const int n = x.size();
  mpfr_prec_t prec = n ? x[0].prec() : Real::default_prec();
  Mat<Real> m(n, n);
  Real denom = Real(1l).at_prec(prec);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Real s = x[i] + y[j];
      m(i, j) = 1l / s;
      denom *= s;
    }
  Real closed = vandermonde(x) * vandermonde(y) / denom;
  return {det(std::move(m)), closed};
}

std::pair<Real, Real> borchardt_check(const PointTuple& x, const PointTuple& y) {
  if (x.size() != y.size()) throw domain_error("borchardt_check: size mismatch");
  const int n = x.size();
  Mat<Real> m(n, n), m2(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Real s = 1l / (x[i] + y[j]);
      m(i, j) = s;
      m2(i, j) = s * s;
    }
  Real lhs = det(std::move(m2));
  Real rhs = det(m) * permanent(m);
  return {lhs, rhs};
}

Real gram_determinant(const AlphaParam& a, const PointTuple& x) {
  const int n = x.size();
  Mat<Real> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = eval_kernel(a, x[i], x[j]);
  return det(std::move(m));
}

namespace {

// One sorted tuple per (seed, order, sample, which), log-uniform over
// [exp(logMin), exp(logMax)].  Draws until strictly increasing (ties have
// probability ~2^-53 per pair; the retry keeps determinism regardless).
std::vector<Real> draw_tuple(SplitMix64& g, int m, double logMin, double logMax,
                             mpfr_prec_t prec) {
  Real lo = Real(logMin, prec), hi = Real(logMax, prec);
  for (;;) {
    std::vector<Real> xs;
    xs.reserve(size_t(m));
    for (int i = 0; i < m; ++i) xs.push_back(exp(lo + g.unit(prec) * (hi - lo)));
    std::sort(xs.begin(), xs.end(), [](const Real& a, const Real& b) { return a < b; });
    bool ok = true;
    for (int i = 1; i < m; ++i)
      if (!(xs[i - 1] < xs[i])) { ok = false; break; }
    if (ok) return xs;
  }
}

// Geometric progression x0 * (1+eps)^i with eps = 2^-e, e in [2, 30]:
// nearly confluent tuples where minors vanish to high order.
std::vector<Real> draw_cluster(SplitMix64& g, int m, double logMin, double logMax,
                               mpfr_prec_t prec) {
  Real lo = Real(logMin, prec), hi = Real(logMax, prec);
  Real x0 = exp(lo + g.unit(prec) * (hi - lo));
  Real e = 2 + g.unit(prec) * 28;
  // eps = 2^-e with e real; exp2 via exp(e log 2) is deterministic for fixed prec
  Real eps = exp(-e * log(Real(2l).at_prec(prec)));
  Real ratio = 1 + eps;
  std::vector<Real> xs;
  xs.reserve(size_t(m));
  Real cur = x0;
  for (int i = 0; i < m; ++i) {
    xs.push_back(cur);
    cur *= ratio;
  }
  return xs;
}

}  // namespace

TpScanReport tp_scan(const AlphaParam& a, int maxOrder, int samplesPerOrder,
                     uint64_t seed, double logMin, double logMax, ScanMode mode) {
  if (maxOrder < 1) throw domain_error("tp_scan: maxOrder must be >= 1");
  if (samplesPerOrder < 1) throw domain_error("tp_scan: samplesPerOrder must be >= 1");
  if (!(logMin < logMax)) throw domain_error("tp_scan: empty log range");
  mpfr_prec_t prec = a.precision_bits();

  TpScanReport rep;
  rep.maxOrder = maxOrder;
  rep.samplesPerOrder = samplesPerOrder;
  rep.seed = seed;
  rep.mode = mode;
  rep.logMin = logMin;
  rep.logMax = logMax;
  rep.minByOrder.assign(size_t(maxOrder), Real::zero(prec));

  // Anything below this is treated as genuinely negative rather than rounding
  // noise around an exact zero (clustered tuples can produce dets ~ 2^-prec).
  Real noise = -two_pow(16 - long(prec), prec);

  bool first = true;
  for (int m = 1; m <= maxOrder; ++m) {
    bool orderFirst = true;
    for (int s = 0; s < samplesPerOrder; ++s) {
      SplitMix64 g(mix_seed(seed, uint64_t(m), uint64_t(s)));
      std::vector<Real> xs, ys;
      if (mode == ScanMode::kClustered) {
        xs = draw_cluster(g, m, logMin, logMax, prec);
        ys = draw_cluster(g, m, logMin, logMax, prec);
      } else {
        xs = draw_tuple(g, m, logMin, logMax, prec);
        ys = draw_tuple(g, m, logMin, logMax, prec);
      }
      PointTuple X = PointTuple::of(xs), Y = PointTuple::of(ys);
      Real d = det_kernel_matrix(a, X, Y);
      if (d < noise) ++rep.negativeCount;
      if (orderFirst || d < rep.minByOrder[size_t(m - 1)]) {
        rep.minByOrder[size_t(m - 1)] = d;
        orderFirst = false;
      }
      if (first || d < rep.minMinor) {
        rep.minMinor = d;
        rep.minOrder = m;
        rep.minSample = s;
        rep.witnessX = X.v;
        rep.witnessY = Y.v;
        first = false;
      }
    }
  }
  return rep;
}

Real eval_logistic(const AlphaParam& a, const Real& x) {
  mpfr_prec_t prec = a.precision_bits();
  if (a.alpha() < 0l || a.alpha() >= 1.0)
    throw domain_error("eval_logistic: requires 0 <= a < 1");
  Real cx = cosh(x.at_prec(prec));
  if (a.is_zero()) return 1l / (2 * (cx + 1));
  Real pi = const_pi(prec);
  return a.sin_pi_alpha() / (2 * pi * a.alpha() * (cx + a.cos_pi_alpha()));
}

std::pair<Real, Real> logistic_mgf_check(const AlphaParam& a, const Real& s) {
  mpfr_prec_t prec = a.precision_bits();
  if (!(abs(s) < 1.0)) throw domain_error("logistic_mgf_check: requires |s| < 1");

  Real closed = Real::zero(prec);
  if (s.is_zero()) {
    closed = Real(1l).at_prec(prec);
  } else if (a.is_zero()) {
    // lim a->0 sin(pi a s)/(a sin(pi s)) = pi s / sin(pi s)
    Real pi = const_pi(prec);
    closed = pi * s / sin(pi * s.at_prec(prec));
  } else {
    Real pi = const_pi(prec);
    closed = sin(pi * a.alpha() * s.at_prec(prec)) /
             (a.alpha() * sin(pi * s.at_prec(prec)));
  }

  // Integrand decays like e^{-(1-|s|)|x|}; T makes the tail ~e^{-22} or less.
  double sd = s.to_double();
  double T = 60.0 + 16.0 / (1.0 - std::abs(sd) + 1e-12);
  auto f = [&](const Real& x) { return exp(s * x) * eval_logistic(a, x); };
  Real numeric = adaptive_simpson(f, Real(-T, prec), Real(T, prec), Real(1e-15, prec));
  return {numeric, closed};
}

}  // namespace tplab
