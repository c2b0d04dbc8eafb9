// Acceptance sweep: fourteen end-to-end checks, one pass/fail line each.
// Tolerances are pinned here, not configurable; the binary exits nonzero if
// any criterion fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "tplab/alpha.hpp"
#include "tplab/asm.hpp"
#include "tplab/bigint.hpp"
#include "tplab/chebyshev.hpp"
#include "tplab/conjectures.hpp"
#include "tplab/delta.hpp"
#include "tplab/errors.hpp"
#include "tplab/kernel.hpp"
#include "tplab/numeric.hpp"
#include "tplab/real.hpp"

using namespace tplab;

namespace {

constexpr mpfr_prec_t P = 256;

Real rmax(const Real& a, const Real& b) { return a < b ? b : a; }

Real rel(const Real& got, const Real& want) {
  Real floor_ = ldexp(Real(1l).at_prec(P), -200);
  return abs(got - want) / rmax(abs(want), floor_);
}

std::string short_dec(const Real& v) { return v.dec(3); }

double log_uniform(SplitMix64& g, double lo, double hi) {
  return std::exp(std::log(lo) + g.next() * 0x1p-64 * (std::log(hi) - std::log(lo)));
}

// x, y in [0.5, 2] with the ratio kept away from 1 so the series route
// converges promptly
std::pair<Real, Real> draw_pair(SplitMix64& g) {
  double x = log_uniform(g, 0.5, 2.0);
  double y = log_uniform(g, 0.5, 2.0);
  while (std::abs(std::log(y / x)) < 0.1) y = log_uniform(g, 0.5, 2.0);
  return {Real(x, P), Real(y, P)};
}

PointTuple draw_tuple(SplitMix64& g, int n, double lo, double hi) {
  std::vector<Real> v;
  for (int i = 0; i < n; ++i) v.push_back(Real(log_uniform(g, lo, hi), P));
  std::sort(v.begin(), v.end());
  for (size_t i = 1; i < v.size(); ++i)
    if (!(v[i - 1] < v[i])) v[i] = v[i - 1] * Real(1.0 + 1e-9, P);
  return PointTuple::of(std::move(v));
}

IntPoly poly_of(const std::vector<long>& c) {
  IntPoly p;
  for (size_t i = 0; i < c.size(); ++i) p.set(int(i), c[i]);
  p.trim();
  return p;
}

std::string poly_str(const IntPoly& p) {
  std::string s = "(";
  for (int i = 0; i <= p.degree(); ++i)
    s += (i ? "," : "") + p.coeff(i).get_str();
  return s + ")";
}

using Outcome = std::pair<bool, std::string>;

// 1. boundary anchor: delta(1, y) extrapolated to y = 0 equals sf(n-1)^2 V_n
Outcome boundary_anchor() {
  const double tol = 1e-6;
  std::vector<AlphaParam> as = {AlphaParam::from_double(0.05, P), AlphaParam::from_double(0.15, P),
                                AlphaParam::from_rational(1, 3, P), AlphaParam::from_double(0.45, P)};
  std::vector<DeltaRoute> routes = {DeltaRoute::kSchur, DeltaRoute::kLascoux, DeltaRoute::kAsm};
  Real worst = Real::zero(P);
  for (const AlphaParam& a : as)
    for (int n = 2; n <= 5; ++n) {
      mpz_class sf = superfactorial(n - 1);
      Real target = Real(sf * sf, P) * v_product(a, n);
      for (DeltaRoute rt : routes) {
        std::vector<Real> ladder;
        for (int l = 0; l < 4; ++l) {
          Real y = Real(1e-6, P) * two_pow(-l, P);
          ladder.push_back(delta(a, n, Real(1l).at_prec(P), y, rt).value);
        }
        Real v = richardson(ladder, Real(2l).at_prec(P), 1).value;
        Real err = target.is_zero() ? abs(v) : rel(v, target);
        if (err > worst) worst = err;
        if (err > tol)
          return {false, "order " + std::to_string(n) + " route " + route_name(rt) +
                             " off by " + short_dec(err) + " (tol 1e-6)"};
      }
    }
  return {true, "max deviation " + short_dec(worst) + " (tol 1e-6)"};
}

// 2. five evaluation routes agree on random points
Outcome route_cross_agreement() {
  const Real tolExact(1e-20, P), tolFd(1e-8, P);
  std::vector<AlphaParam> as = {AlphaParam::from_double(0.1, P), AlphaParam::from_double(0.2, P),
                                AlphaParam::from_rational(1, 3, P), AlphaParam::from_rational(1, 2, P),
                                AlphaParam::from_double(0.7, P)};
  SplitMix64 g(42);
  Real worstExact = Real::zero(P), worstFd = Real::zero(P);
  for (int n = 2; n <= 5; ++n)
    for (const AlphaParam& a : as)
      for (int rep = 0; rep < 20; ++rep) {
        auto [x, y] = draw_pair(g);
        Real vs = delta(a, n, x, y, DeltaRoute::kSchur).value;
        Real vl = delta(a, n, x, y, DeltaRoute::kLascoux).value;
        Real va = delta(a, n, x, y, DeltaRoute::kAsm).value;
        for (const Real& d : {rel(vs, vl), rel(va, vl), rel(vs, va)}) {
          if (d > worstExact) worstExact = d;
          if (d > tolExact)
            return {false, "exact routes disagree by " + short_dec(d) + " at n=" +
                               std::to_string(n) + " alpha=" + a.describe()};
        }
        for (DeltaRoute rt : {DeltaRoute::kFd, DeltaRoute::kWronskian}) {
          RouteResult r = delta(a, n, x, y, rt);
          Real diff = abs(r.value - vl);
          if (diff > r.errorEstimate)
            return {false, std::string(route_name(rt)) + " breaks its own error bound at n=" +
                               std::to_string(n) + " alpha=" + a.describe() + " x=" + short_dec(x) +
                               " y=" + short_dec(y)};
          Real d = rel(r.value, vl);
          if (d > worstFd) worstFd = d;
          if (d > tolFd)
            return {false, std::string(route_name(rt)) + " off by " + short_dec(d) +
                               " (tol 1e-8) at n=" + std::to_string(n)};
        }
      }
  return {true, "exact max " + short_dec(worstExact) + " (tol 1e-20), ladder max " +
                    short_dec(worstFd) + " (tol 1e-8), bounds honest"};
}

// 3. hand-differentiated n = 2 closed form at the symmetric parameter
Outcome symbolic_anchor() {
  const Real tol(1e-25, P);
  AlphaParam a = AlphaParam::from_rational(1, 2, P);
  SplitMix64 g(3);
  Real worst = Real::zero(P);
  for (int rep = 0; rep < 10; ++rep) {
    auto [x, y] = draw_pair(g);
    Real closed = 4 * x * y / pow_si(x * x + y * y, 4);
    for (DeltaRoute rt : {DeltaRoute::kSchur, DeltaRoute::kLascoux, DeltaRoute::kAsm}) {
      Real d = rel(delta(a, 2, x, y, rt).value, closed);
      if (d > worst) worst = d;
      if (d > tol) return {false, std::string(route_name(rt)) + " off by " + short_dec(d)};
    }
    Real dd = rel(delta_diagonal(a, 2, x), 1 / (4 * pow_si(x, 6)));
    if (dd > worst) worst = dd;
    if (dd > tol) return {false, "diagonal value off by " + short_dec(dd)};
  }
  return {true, "max deviation " + short_dec(worst) + " (tol 1e-25)"};
}

// 4. negative witnesses past the positivity threshold
Outcome falsification_witnesses() {
  struct { int n; double alpha; } cases[] = {{3, 0.4}, {4, 0.3}, {5, 0.22}};
  for (auto c : cases) {
    AlphaParam a = AlphaParam::from_double(c.alpha, P);
    Real origin = delta_at_origin(a, c.n);
    if (!(origin < 0l))
      return {false, "origin value at n=" + std::to_string(c.n) + " is " + short_dec(origin) +
                         ", expected negative"};
    TpScanReport r = tp_scan(a, c.n, 200, 42, std::log(0.001), 0.0, ScanMode::kClustered);
    if (r.negativeCount == 0 || r.minOrder != c.n)
      return {false, "clustered scan at n=" + std::to_string(c.n) +
                         " found no order-n negative (negativeCount=" +
                         std::to_string(r.negativeCount) + ", minOrder=" +
                         std::to_string(r.minOrder) + ")"};
    for (int m = 1; m < c.n; ++m)
      if (!(r.minByOrder[size_t(m - 1)] > 0))
        return {false, "unexpected nonpositive minor below the top order at n=" +
                           std::to_string(c.n)};
  }
  return {true, "origin < 0 and clustered scans hit order-n negatives for (3,0.4) (4,0.3) (5,0.22)"};
}

// 5. scans stay positive at the classical parameters
Outcome positive_scans() {
  long den[] = {1, 2, 3, 4};
  long num[] = {0, 1, 1, 1};
  for (int i = 0; i < 4; ++i) {
    AlphaParam a = AlphaParam::from_rational(num[i], den[i], P);
    TpScanReport r = tp_scan(a, 5, 200, 42, std::log(0.5), std::log(2.0), ScanMode::kLogUniform);
    if (!(r.minMinor > 0) || r.negativeCount != 0)
      return {false, "minimal minor " + short_dec(r.minMinor) + " at alpha=" + a.describe()};
  }
  return {true, "all minors positive for alpha in {0, 1/2, 1/3, 1/4} up to order 5"};
}

// 6. Cauchy and Borchardt identities, and the kernel as a double alternant
Outcome classical_identities() {
  const Real tol(1e-20, P);
  AlphaParam half = AlphaParam::from_rational(1, 2, P);
  SplitMix64 g(6);
  Real worst = Real::zero(P);
  for (int n = 2; n <= 5; ++n) {
    PointTuple X = draw_tuple(g, n, 0.5, 2.5), Y = draw_tuple(g, n, 0.5, 2.5);
    auto [cl, cr] = cauchy_check(X, Y);
    auto [bl, br] = borchardt_check(X, Y);
    std::vector<Real> xs2, ys2;
    for (const Real& t : X.v) xs2.push_back(t * t);
    for (const Real& t : Y.v) ys2.push_back(t * t);
    auto [c2, c2closed] = cauchy_check(PointTuple::of(xs2), PointTuple::of(ys2));
    (void)c2;
    Real kd = det_kernel_matrix(half, X, Y);
    for (const Real& d : {rel(cl, cr), rel(bl, br), rel(kd, c2closed)}) {
      if (d > worst) worst = d;
      if (d > tol) return {false, "identity off by " + short_dec(d) + " at n=" + std::to_string(n)};
    }
  }
  return {true, "max deviation " + short_dec(worst) + " (tol 1e-20)"};
}

// 7. enumeration sizes and statistic identities
Outcome asm_suite() {
  long expect[] = {0, 1, 2, 7, 42, 429, 7436};
  for (int n = 1; n <= 6; ++n) {
    mpz_class num = 1, den = 1;
    for (long k = 0; k < n; ++k) {
      num *= factorial(3 * k + 1);
      den *= factorial(long(n) + k);
    }
    mpz_class formula;
    mpz_divexact(formula.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (asm_count(n) != uint64_t(expect[n]) || formula != expect[n])
      return {false, "count mismatch at n=" + std::to_string(n)};
  }
  for (int n = 1; n <= 6; ++n) {
    bool ok = true;
    std::string why;
    for_each_asm(n, [&](const AsmMatrix& A) {
      if (!ok) return;
      AsmStats s = asm_stats(A);
      AsmMatrix Q = quarter_turn(A);
      AsmStats sq = asm_stats(Q);
      AsmMatrix R = quarter_turn(quarter_turn(quarter_turn(Q)));
      if (s.j != 2 * (s.inv - s.mu)) { ok = false; why = "J != 2I - 2mu"; }
      else if (s.nu != s.j / 2) { ok = false; why = "nu != J/2"; }
      else if (!is_valid_asm(Q) || sq.mu != s.mu) { ok = false; why = "quarter turn broke mu"; }
      else if (2 * sq.nu != n * (n - 1) - 2 * s.nu - 2 * s.mu) { ok = false; why = "quarter-turn nu relation"; }
      else if (R.e != A.e) { ok = false; why = "rotation order is not 4"; }
    });
    if (!ok) return {false, why + " at n=" + std::to_string(n)};
  }
  return {true, "counts (1,2,7,42,429,7436) and all statistic identities hold through n = 6"};
}

// 8. generating polynomials against their stated coefficient lists
Outcome generating_polynomials() {
  struct Pin { int n, k; std::vector<long> stated; };
  std::vector<Pin> pins = {{4, 1, {0, 2, 6, 6, 2}},
                           {5, 1, {0, 3, 14, 35, 48, 48, 35, 14, 3}},
                           {5, 2, {0, 2, 12, 21, 24, 21, 12, 2}},
                           {5, 3, {0, 1, 0, 6, 6, 0, 1}}};
  std::string fail;
  for (const Pin& pin : pins) {
    IntPoly z = z_nk_poly(pin.n, pin.k);
    IntPoly stated = poly_of(pin.stated);
    if (!(z == stated))
      fail += " (" + std::to_string(pin.n) + "," + std::to_string(pin.k) + ") stated " +
              poly_str(stated) + " vs enumerated " + poly_str(z) + ";";
  }
  for (int n = 1; n <= 6; ++n) {
    mpz_class total = 0;
    for (int k = 0; k <= mu_max(n); ++k) total += z_nk_poly(n, k).eval_one();
    if (total != mpz_class(asm_count(n)))
      return {false, "sum of Z_{n,k}(1) misses the count at n=" + std::to_string(n)};
    if (!(z_nk_poly(n, 0) == q_factorial_poly(n)))
      return {false, "mu = 0 class is not the inversion polynomial at n=" + std::to_string(n)};
  }
  if (!fail.empty()) return {false, "coefficient mismatch:" + fail};
  return {true, "stated polynomials, totals and mu = 0 classes all verified through n = 6"};
}

// 9. weighted-sum determinant identity, including the q = 1 degeneration
Outcome ik_identity() {
  const Real tol(1e-18, P);
  SplitMix64 g(9);
  Real worst = Real::zero(P);
  for (int n = 2; n <= 4; ++n)
    for (int rep = 0; rep < 10; ++rep) {
      Complex q(rep == 0 ? Real(1l).at_prec(P) : Real(log_uniform(g, 0.25, 1.75), P));
      PointTuple X = draw_tuple(g, n, 0.5, 2.0), Y = draw_tuple(g, n, 0.5, 2.0);
      Complex lhs = ik_propp_sum(q, X, Y), rhs = ik_direct(q, X, Y);
      Real d = abs(lhs - rhs) / rmax(abs(rhs), ldexp(Real(1l).at_prec(P), -200));
      if (d > worst) worst = d;
      if (d > tol)
        return {false, "sum and determinant differ by " + short_dec(d) + " at n=" +
                           std::to_string(n) + " rep " + std::to_string(rep)};
    }
  return {true, "max deviation " + short_dec(worst) + " (tol 1e-18, q = 1 included)"};
}

// 10. derivative kernel: finite differences, boundary values, x-derivatives
Outcome derivative_kernel_suite() {
  const Real tol(1e-8, P);
  Real worst = Real::zero(P);
  AlphaParam a = AlphaParam::from_double(0.3, 320);
  Real x(1.1, 320), y(0.8, 320);
  for (int r = 1; r <= 6; ++r) {
    auto f = [&](const Real& yy) { return eval_kernel(a, x, yy); };
    Extrapolated fd = deriv_extrapolated(f, y, r, 320, -8, 7, 2);
    Real d = rel(fd.value, t_kernel(a, r, x, y));
    if (d > worst) worst = d;
    if (d > tol) return {false, "finite differences off by " + short_dec(d) + " at r=" + std::to_string(r)};
  }
  for (const AlphaParam& ab : {AlphaParam::from_double(0.22, P), AlphaParam::from_double(0.37, P)})
    for (int r = 0; r <= 10; ++r) {
      Real got = t_kernel(ab, r, Real(1l).at_prec(P), Real::zero(P));
      Real want = Real(factorial(r), P) * cheb_u(ab, r + 1);
      if (r & 1) want = -want;
      Real d = rel(got, want);
      if (d > worst) worst = d;
      if (d > tol) return {false, "boundary value off by " + short_dec(d) + " at r=" + std::to_string(r)};
    }
  AlphaParam ax = AlphaParam::from_double(0.22, P);
  for (int r = 0; r <= 11; ++r)
    for (int j = 1; r + j <= 12; ++j) {
      auto [fd, closed] = t_xderiv_check(ax, r, j);
      Real d = rel(fd, closed);
      if (d > worst) worst = d;
      if (d > tol)
        return {false, "x-derivative off by " + short_dec(d) + " at r=" + std::to_string(r) +
                           " j=" + std::to_string(j)};
    }
  return {true, "max deviation " + short_dec(worst) + " (tol 1e-8)"};
}

// 11. grouped sums: closed mu = 0 product, realness, decomposition
// identities, quotient coefficients
Outcome grouped_sum_suite() {
  const Real tolId(1e-20, P);
  Real imagCap = ldexp(Real(1l).at_prec(P), -128);
  std::vector<Real> pts = {Real(0.5, P), Real(1l).at_prec(P), Real(2l).at_prec(P)};
  for (const AlphaParam& a : {AlphaParam::from_double(0.2, P), AlphaParam::from_double(0.31, P)})
    for (int n = 2; n <= 6; ++n)
      for (const Real& x : pts)
        for (const Real& y : pts) {
          FnkValue f0 = f_nk(a, n, 0, x, y);
          if (rel(f0.value, f_n0_closed(a, n, x, y)) > Real(1e-60, P))
            return {false, "mu = 0 sum misses its closed product at n=" + std::to_string(n)};
          for (int k = 0; k <= mu_max(n); ++k)
            if (f_nk(a, n, k, x, y).imagResidue > imagCap)
              return {false, "imaginary residue above 2^-128 at n=" + std::to_string(n) +
                                 " k=" + std::to_string(k)};
        }

  AlphaParam ad = AlphaParam::from_double(0.19, P);
  Real xd(1.1, P), yd(0.9, P);
  std::string fail;
  struct { int n, k; } ids[] = {{4, 1}, {5, 1}, {5, 2}, {5, 3}};
  for (auto c : ids) {
    Real r = decomposition_residual(ad, c.n, c.k, xd, yd);
    if (r > tolId)
      fail += " (" + std::to_string(c.n) + "," + std::to_string(c.k) + ") residual " +
              short_dec(r) + ";";
  }
  if (!fail.empty()) {
    // quantify the one mismatch: the stated (5,1) weight vector (3,8,10,2)
    // implies nu-counts 35/48 in the middle, the enumeration gives 34/49;
    // shifting a unit to (3,8,9,4) restores the identity
    const Complex& om = ad.omega();
    Complex Q = om * Complex(xd) + conj(om) * Complex(yd);
    Real q2 = (Q * conj(Q)).re;
    Real corrected = Real(3l) * pow_si(q2, 2) * (f_n0_closed(ad, 5, xd, yd) / f_n0_closed(ad, 3, xd, yd)) +
                     Real(8l) * pow_si(q2, 4) * (f_n0_closed(ad, 4, xd, yd) / f_n0_closed(ad, 2, xd, yd)) +
                     Real(9l) * pow_si(q2, 6) * (f_n0_closed(ad, 4, xd, yd) / f_n0_closed(ad, 3, xd, yd)) +
                     Real(4l) * pow_si(q2, 8) * f_n0_closed(ad, 2, xd, yd);
    Real fixedRel = rel(f_nk(ad, 5, 1, xd, yd).value, corrected);
    return {false, "decomposition identities:" + fail + " corrected (5,1) weights (3,8,9,4) give rel " +
                       short_dec(fixedRel)};
  }

  for (int n = 2; n <= 6; ++n) {
    AlphaParam a = AlphaParam::from_double(0.9 / n, P);
    std::vector<Real> c = c_coefficients(a, n);
    for (const Real& v : c)
      if (!(v > 0l)) return {false, "quotient coefficient not positive at n=" + std::to_string(n)};
    const Complex& om = a.omega();
    for (double vx : {0.7, 1.3})
      for (double vy : {0.6, 1.0}) {
        Real x(vx, P), y(vy, P);
        Complex Q = om * Complex(x) + conj(om) * Complex(y);
        Complex Qb = conj(om) * Complex(x) + om * Complex(y);
        Complex quot(Real::zero(P));
        for (int m = 0; m <= n - 1; ++m) quot += pow_si(Q, 2 * m) * pow_si(Qb, 2 * (n - 1 - m));
        Real direct = Real::zero(P);
        for (int i = 0; i < 2 * n - 1; ++i)
          direct += c[size_t(i)] * pow_si(x, 2 * n - 2 - i) * pow_si(y, i);
        if (rel(direct, quot.re) > tolId)
          return {false, "quotient coefficients miss the division oracle at n=" + std::to_string(n)};
      }
  }
  return {true, "closed products, realness and quotient coefficients verified through n = 6"};
}

// 12. band matrices: displays, symmetries, positivity sweep, minor formulas
Outcome band_matrix_suite() {
  auto combo = [](std::vector<std::pair<long, long>> terms) {
    ChebCombo c;
    for (auto [m, w] : terms) c.add(m, mpz_class(w));
    return c;
  };
  using Row = std::vector<ChebCombo>;
  ChebCombo z;
  std::vector<std::vector<Row>> displays(6);
  displays[1] = {{combo({{1, 1}})}};
  displays[2] = {{combo({{1, 2}}), combo({{2, 1}}), z},
                 {z, combo({{2, 1}}), combo({{1, 2}})}};
  displays[3] = {{combo({{1, 3}}), combo({{2, 3}}), combo({{3, 1}}), z, z},
                 {z, combo({{2, 3}}), combo({{3, 1}, {1, 9}}), combo({{2, 3}}), z},
                 {z, z, combo({{3, 1}}), combo({{2, 3}}), combo({{1, 3}})}};
  displays[4] = {
      {combo({{1, 4}}), combo({{2, 6}}), combo({{3, 4}}), combo({{4, 1}}), z, z, z},
      {z, combo({{2, 6}}), combo({{3, 4}, {1, 24}}), combo({{4, 1}, {2, 16}}), combo({{3, 4}}), z, z},
      {z, z, combo({{3, 4}}), combo({{4, 1}, {2, 16}}), combo({{3, 4}, {1, 24}}), combo({{2, 6}}), z},
      {z, z, z, combo({{4, 1}}), combo({{3, 4}}), combo({{2, 6}}), combo({{1, 4}})}};
  for (int n = 1; n <= 4; ++n) {
    BandMatrix b = band_matrix(n);
    for (int i = 1; i <= n; ++i)
      for (int k = 1; k <= 2 * n - 1; ++k)
        if (!(b.at(i, k) == displays[size_t(n)][size_t(i - 1)][size_t(k - 1)]))
          return {false, "display mismatch at order " + std::to_string(n) + " entry (" +
                             std::to_string(i) + "," + std::to_string(k) + ")"};
  }
  BandMatrix b5 = band_matrix(5);
  std::vector<Row> left5 = {
      {combo({{1, 5}}), combo({{2, 10}}), combo({{3, 10}}), combo({{4, 5}}), combo({{5, 1}})},
      {z, combo({{2, 10}}), combo({{3, 10}, {1, 50}}), combo({{4, 5}, {2, 50}}), combo({{5, 1}, {3, 25}})},
      {z, z, combo({{3, 10}}), combo({{4, 5}, {2, 50}}), combo({{5, 1}, {3, 25}, {1, 100}})},
      {z, z, z, combo({{4, 5}}), combo({{5, 1}, {3, 25}})},
      {z, z, z, z, combo({{5, 1}})}};
  for (int i = 1; i <= 5; ++i)
    for (int k = 1; k <= 5; ++k)
      if (!(b5.at(i, k) == left5[size_t(i - 1)][size_t(k - 1)]))
        return {false, "display mismatch at order 5 entry (" + std::to_string(i) + "," +
                           std::to_string(k) + ")"};
  if (!(b5.at(5, 9) == combo({{1, 5}}))) return {false, "display mismatch at order 5 corner"};

  for (int n = 1; n <= 12; ++n) {
    BandMatrix b = band_matrix(n);
    for (int i = 1; i <= n; ++i)
      for (int k = 1; k <= 2 * n - 1; ++k) {
        if ((k < i || k > n - 1 + i) && !b.at(i, k).is_zero())
          return {false, "off-band entry at n=" + std::to_string(n)};
        if (!(b.at(i, k) == b.at(n + 1 - i, 2 * n - k)))
          return {false, "persymmetry fails at n=" + std::to_string(n)};
      }
    for (int i = 1; i + n <= 2 * n - 1; ++i) {
      ChebCombo raw;
      for (int j = i; j <= n; ++j) raw.add(2 * j - n - i, binomial(n, j) * binomial(n, n + i - j));
      if (!raw.is_zero()) return {false, "column n+i fails to cancel at n=" + std::to_string(n)};
    }
  }

  for (int n = 2; n <= 5; ++n) {
    AlphaParam a = AlphaParam::from_double(0.9 / n, P);
    TpCheckReport r = check_tp_band(n, a, Real(1e-40, P), true);
    if (!(r.minMinor >= Real(-1e-30, P)))
      return {false, "band minor " + short_dec(r.minMinor) + " below -1e-30 at n=" + std::to_string(n)};
  }

  AlphaParam a2 = AlphaParam::from_double(0.2, P);
  for (int n = 2; n <= 5; ++n) {
    std::vector<int> sigma;
    std::function<bool(int, int)> walk = [&](int lo, int need) -> bool {
      if (need == 0) {
        if (a_sigma(n, sigma) != a_sigma_minor(n, sigma)) return false;
        return true;
      }
      for (int s = lo; s <= 2 * n - 1 - need + 1; ++s) {
        sigma.push_back(s);
        bool ok = walk(s + 1, need - 1);
        sigma.pop_back();
        if (!ok) return false;
      }
      return true;
    };
    if (!walk(1, n)) return {false, "row-minor product formula fails at n=" + std::to_string(n)};
    std::vector<int> staircase;
    for (int i = n; i <= 2 * n - 1; ++i) staircase.push_back(i);
    if (a_sigma(n, staircase) != 1) return {false, "staircase minor is not 1"};
    if (rel(b_sigma(a2, n, staircase), v_product(a2, n)) > Real(1e-60, P))
      return {false, "staircase column minor is not the U product at n=" + std::to_string(n)};
  }
  return {true, "displays, symmetries, positivity sweeps and minor formulas verified"};
}

// 13. degree audit: doubling both arguments scales by 2^{-n(n+1)}
Outcome homogeneity() {
  const Real tol(1e-20, P);
  Real worst = Real::zero(P);
  for (const AlphaParam& a : {AlphaParam::from_double(0.2, P), AlphaParam::from_double(0.45, P)})
    for (int n = 1; n <= 4; ++n)
      for (auto [xv, yv] : {std::pair<double, double>{1.3, 0.7}, {0.6, 1.9}}) {
        Real x(xv, P), y(yv, P);
        Real lhs = delta(a, n, 2 * x, 2 * y, DeltaRoute::kLascoux).value;
        Real rhs = ldexp(delta(a, n, x, y, DeltaRoute::kLascoux).value, -long(n) * (n + 1));
        Real d = rel(lhs, rhs);
        if (d > worst) worst = d;
        if (d > tol) return {false, "scaling off by " + short_dec(d) + " at n=" + std::to_string(n)};
      }
  return {true, "max deviation " + short_dec(worst) + " (tol 1e-20)"};
}

// 14. moment integral of the associated density against the closed form
Outcome logistic_mgf() {
  const Real tol(1e-6, P);
  Real worst = Real::zero(P);
  for (double av : {0.3, 0.5, 0.8}) {
    AlphaParam a = AlphaParam::from_double(av, P);
    for (double sv : {0.0, 0.5, -0.5, 0.9, -0.9}) {
      auto [numeric, closed] = logistic_mgf_check(a, Real(sv, P));
      Real d = rel(numeric, closed);
      if (d > worst) worst = d;
      if (d > tol)
        return {false, "mgf off by " + short_dec(d) + " at alpha=" + a.describe() +
                           " s=" + short_dec(Real(sv, P))};
    }
  }
  return {true, "max deviation " + short_dec(worst) + " (tol 1e-6)"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    std::function<Outcome()> fn;
  };
  std::vector<Criterion> criteria = {
      {"boundary anchor matches the superfactorial product", boundary_anchor},
      {"five evaluation routes cross-agree", route_cross_agreement},
      {"hand-differentiated closed form at the symmetric parameter", symbolic_anchor},
      {"negative witnesses past the threshold", falsification_witnesses},
      {"positivity scans at the classical parameters", positive_scans},
      {"Cauchy and Borchardt identities", classical_identities},
      {"alternating-sign-matrix counts and statistics", asm_suite},
      {"generating polynomials by minus count", generating_polynomials},
      {"weighted-sum determinant identity", ik_identity},
      {"derivative kernel closed forms", derivative_kernel_suite},
      {"grouped sums and quotient coefficients", grouped_sum_suite},
      {"band matrix displays and minors", band_matrix_suite},
      {"homogeneity degree audit", homogeneity},
      {"moment integral of the associated density", logistic_mgf},
  };

  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.first) ++failed;
    std::printf("criterion %02zu %s  %s: %s\n", i + 1, o.first ? "PASS" : "FAIL",
                criteria[i].title, o.second.c_str());
    std::fflush(stdout);
  }
  std::printf("acceptance: %zu/%zu passed, %d failed\n", criteria.size() - size_t(failed),
              criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
