#include "tplab/conjectures.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "tplab/asm.hpp"
#include "tplab/bigint.hpp"
#include "tplab/chebyshev.hpp"
#include "tplab/complexhp.hpp"
#include "tplab/delta.hpp"
#include "tplab/errors.hpp"

namespace tplab {

void ChebCombo::add(long m, const mpz_class& coeff) {
  if (coeff == 0 || m == 0) return;  // U_0 = 0
  long key = m;
  mpz_class w = coeff;
  if (key < 0) {  // U_{-m} = -U_m
    key = -key;
    w = -w;
  }
  auto [it, fresh] = c.emplace(key, w);
  if (!fresh) {
    it->second += w;
    if (it->second == 0) c.erase(it);
  }
}

Real ChebCombo::evaluate(const AlphaParam& a) const {
  Real acc(0.0, a.precision_bits());
  for (const auto& [m, w] : c) acc = acc + Real(w, a.precision_bits()) * cheb_u(a, m);
  return acc;
}

std::string ChebCombo::str() const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {  // highest index first
    mpz_class w = it->second;
    bool neg = w < 0;
    if (neg) w = -w;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (w != 1) os << w.get_str() << "*";
    os << "U" << it->first;
  }
  return os.str();
}

Mat<Real> BandMatrix::evaluate(const AlphaParam& a) const {
  Mat<Real> m(n, 2 * n - 1);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < 2 * n - 1; ++k) m(i, k) = e[size_t(i) * (2 * n - 1) + size_t(k)].evaluate(a);
  return m;
}

BandMatrix band_matrix(int n) {
  if (n < 1 || n > 12) throw domain_error("band_matrix: order must be in [1, 12]");
  BandMatrix b;
  b.n = n;
  b.e.assign(size_t(n) * size_t(2 * n - 1), ChebCombo{});
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= 2 * n - 1; ++k) {
      ChebCombo& cc = b.e[size_t(i - 1) * (2 * n - 1) + size_t(k - 1)];
      for (int j = i; j <= n; ++j) cc.add(2L * j - k, binomial(n, j) * binomial(n, k - j));
    }
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= 2 * n - 1; ++k) {
      bool inBand = k >= i && k <= n - 1 + i;
      if (!inBand && !b.at(i, k).is_zero())
        throw std::logic_error("band_matrix: entry outside the band failed to cancel");
      if (b.at(i, k) != b.at(n + 1 - i, 2 * n - k))
        throw std::logic_error("band_matrix: persymmetry violated");
    }
  return b;
}

namespace {

// base[j][k] = binom(n, k-j) U_{2j-k}: the 180-degree rotation of the
// transpose of the y = 1 degree-factor matrix.
ChebCombo rotated_factor_entry(int n, int j, int k) {
  ChebCombo cc;
  cc.add(2L * j - k, binomial(n, k - j));
  return cc;
}

}  // namespace

bool band_transform_audit(int n) {
  BandMatrix band = band_matrix(n);
  // The rotation claim: base[j][k] must coincide with the (2n-k, n+1-j) entry
  // of the degree-factor matrix binom(n, n-k'+j'-1) U_{k'+2-2j'}.
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= 2 * n - 1; ++k) {
      int kk = 2 * n - k, jj = n + 1 - j;
      ChebCombo direct;
      direct.add(long(kk) + 2 - 2L * jj, binomial(n, n - kk + jj - 1));
      if (direct != rotated_factor_entry(n, j, k)) return false;
    }
  // The row transform T[i][j] = binom(n,j) (j >= i) applied to base must
  // reproduce the band matrix exactly.
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= 2 * n - 1; ++k) {
      ChebCombo acc;
      for (int j = i; j <= n; ++j) {
        mpz_class t = binomial(n, j);
        ChebCombo base = rotated_factor_entry(n, j, k);
        for (const auto& [m, w] : base.c) acc.add(m, t * w);
      }
      if (acc != band.at(i, k)) return false;
    }
  return true;
}

mpz_class band_transform_factor(int n) {
  if (n < 1) throw domain_error("band_transform_factor: order must be >= 1");
  mpz_class f = 1;
  for (int i = 1; i <= n; ++i) f *= binomial(n, i);
  return f;
}

std::vector<int> band_sigma_columns(int n, const std::vector<int>& sigma) {
  if (int(sigma.size()) != n) throw domain_error("band_sigma_columns: need exactly n rows");
  std::vector<int> cols;
  cols.reserve(sigma.size());
  for (int s : sigma) {
    if (s < 1 || s > 2 * n - 1) throw domain_error("band_sigma_columns: row index out of range");
    cols.push_back(2 * n - s);
  }
  std::sort(cols.begin(), cols.end());
  for (size_t i = 1; i < cols.size(); ++i)
    if (cols[i] == cols[i - 1]) throw domain_error("band_sigma_columns: repeated row index");
  return cols;
}

// ---------------------------------------------------------------------------

namespace {

struct QPair {
  Complex q;   // e^{i pi a/2} x + e^{-i pi a/2} y
  Complex qb;  // conjugate combination
};

QPair q_pair(const AlphaParam& ap, const Real& x, const Real& y) {
  const Complex& w = ap.omega();
  return {w * x + conj(w) * y, conj(w) * x + w * y};
}

}  // namespace

FnkValue f_nk(const AlphaParam& a, int n, int k, const Real& x, const Real& y) {
  if (n < 1 || n > 7) throw domain_error("f_nk: order must be in [1, 7]");
  if (k < 0 || k > mu_max(n)) throw domain_error("f_nk: negative-entry count out of range");
  mpfr_prec_t prec = std::max({a.precision_bits(), x.prec(), y.prec()});
  mpfr_prec_t P = prec + 64;
  AlphaParam ap = a.at_prec(P);
  QPair qp = q_pair(ap, x.at_prec(P), y.at_prec(P));
  long M = long(n) * (n - 1);
  Complex acc(P);
  for (const auto& [key, cnt] : group_by_stats(n)) {
    if (key.first != k) continue;
    long nu = key.second;
    acc += pow_si(qp.q, 2 * nu) * pow_si(qp.qb, M - 2L * k - 2 * nu) * Real(long(cnt));
  }
  FnkValue out;
  out.value = acc.re.at_prec(prec);
  out.imagResidue = abs(acc.im).at_prec(prec);
  out.n = n;
  out.k = k;
  return out;
}

Real f_n0_closed(const AlphaParam& a, int n, const Real& x, const Real& y) {
  if (n < 1 || n > 64) throw domain_error("f_n0_closed: order must be in [1, 64]");
  mpfr_prec_t prec = std::max({a.precision_bits(), x.prec(), y.prec()});
  mpfr_prec_t P = prec + 64;
  AlphaParam ap = a.at_prec(P);
  QPair qp = q_pair(ap, x.at_prec(P), y.at_prec(P));
  Complex q2 = qp.q * qp.q, qb2 = qp.qb * qp.qb;
  // powers q2^j, qb2^j for j = 0..n-1
  std::vector<Complex> pq(static_cast<size_t>(n)), pqb(static_cast<size_t>(n));
  pq[0] = Complex(Real(1l).at_prec(P));
  pqb[0] = pq[0];
  for (int j = 1; j < n; ++j) {
    pq[size_t(j)] = pq[size_t(j - 1)] * q2;
    pqb[size_t(j)] = pqb[size_t(j - 1)] * qb2;
  }
  Complex prod(Real(1l).at_prec(P));
  for (int i = 1; i <= n; ++i) {
    Complex factor(P);
    for (int j = 0; j < i; ++j) factor += pq[size_t(j)] * pqb[size_t(i - 1 - j)];
    prod *= factor;
  }
  return prod.re.at_prec(prec);
}

Real decomposition_residual(const AlphaParam& a, int n, int k, const Real& x, const Real& y) {
  bool known = (n == 4 && k == 1) || (n == 5 && (k == 1 || k == 2 || k == 3));
  if (!known)
    throw domain_error("decomposition_residual: closed form known only for (4,1), (5,1), (5,2), (5,3)");
  mpfr_prec_t prec = std::max({a.precision_bits(), x.prec(), y.prec()});
  mpfr_prec_t P = prec + 96;
  AlphaParam ap = a.at_prec(P);
  Real xP = x.at_prec(P), yP = y.at_prec(P);
  QPair qp = q_pair(ap, xP, yP);
  Complex Q2 = qp.q * qp.q, Qb2 = qp.qb * qp.qb;
  Real q2 = (qp.q * qp.qb).re;        // |Q|^2 (the product is real)
  Real s2 = (Q2 + Qb2).re;            // Q^2 + Qbar^2
  Real s4 = (Q2 * Q2 + Qb2 * Qb2).re; // Q^4 + Qbar^4
  Real dd = s4 - Real(2l) * q2 * q2;  // (Q^2 - Qbar^2)^2
  Real closed = Real::zero(P);
  if (n == 4) {
    closed = Real(2l) * pow_si(q2, 2) * pow_si(s2, 3);
  } else if (k == 1) {
    Real f20 = f_n0_closed(ap, 2, xP, yP), f30 = f_n0_closed(ap, 3, xP, yP);
    Real f40 = f_n0_closed(ap, 4, xP, yP), f50 = f_n0_closed(ap, 5, xP, yP);
    closed = Real(3l) * pow_si(q2, 2) * (f50 / f30) + Real(8l) * pow_si(q2, 4) * (f40 / f20) +
             Real(10l) * pow_si(q2, 6) * (f40 / f30) + Real(2l) * pow_si(q2, 8) * f20;
  } else if (k == 2) {
    Real f40 = f_n0_closed(ap, 4, xP, yP);
    closed = Real(2l) * pow_si(q2, 2) * f40 + Real(6l) * pow_si(q2, 4) * s4 * s4 +
             Real(11l) * pow_si(q2, 6) * s4;
  } else {
    closed = pow_si(q2, 2) * s2 * (Real(3l) * pow_si(q2, 4) + s4 * s4 - q2 * q2 * dd);
  }
  Real direct = f_nk(ap, n, k, xP, yP).value;
  Real diff = abs(direct - closed);
  Real scale = abs(closed);
  Real da = abs(direct);
  if (da > scale) scale = da;
  Real tiny = ldexp(Real(1l).at_prec(P), -long(prec));
  if (tiny > scale) scale = tiny;
  return (diff / scale).at_prec(prec);
}

std::vector<Real> c_coefficients(const AlphaParam& a, int n) {
  if (n < 1 || n > 64) throw domain_error("c_coefficients: order must be in [1, 64]");
  mpfr_prec_t P = a.precision_bits() + 32;
  AlphaParam ap = a.at_prec(P);
  std::vector<Real> out;
  out.reserve(size_t(2 * n - 1));
  // Coefficient of x^i y^{2n-2-i} in sum_m Q^{2m} Qbar^{2(n-1-m)}: both powers
  // expand binomially, and the phases collapse to cosines of multiples of
  // pi*alpha, so every value here is a finite integer-weighted cosine sum.
  for (int i = 0; i <= 2 * n - 2; ++i) {
    if (i == 0 || i == 2 * n - 2) {
      // the end coefficients collapse to U_n; going through cheb_u keeps the
      // rational degenerations (exact zero at a = 1/n) instead of leaving
      // cancellation residue from the cosine sum
      out.push_back(cheb_u(ap, n).at_prec(a.precision_bits()));
      continue;
    }
    Real acc(0.0, P);
    for (int m = 0; m <= n - 1; ++m) {
      int dq = 2 * m, dqb = 2 * (n - 1 - m);
      int jlo = std::max(0, i - dqb), jhi = std::min(dq, i);
      for (int j = jlo; j <= jhi; ++j) {
        int kk = i - j;
        mpz_class w = binomial(dq, j) * binomial(dqb, kk);
        acc = acc + Real(w, P) * ap.cos_pi_mult(long(n) - 1 - 2 * m + j - kk);
      }
    }
    out.push_back(acc.at_prec(a.precision_bits()));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Advance a strictly increasing 0-based index combination; false at the end.
bool next_comb(std::vector<int>& idx, int limit) {
  int m = int(idx.size());
  for (int i = m - 1; i >= 0; --i) {
    if (idx[size_t(i)] < limit - (m - i)) {
      ++idx[size_t(i)];
      for (int j = i + 1; j < m; ++j) idx[size_t(j)] = idx[size_t(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

Real minor_det(const Mat<Real>& m, const std::vector<int>& ri, const std::vector<int>& ci) {
  int k = int(ri.size());
  Mat<Real> s(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) s(i, j) = m(ri[size_t(i)], ci[size_t(j)]);
  return det(s);
}

void guard_minor_count(int rows, int cols, int maxOrder) {
  mpz_class total = 0;
  for (int m = 1; m <= maxOrder; ++m) total += binomial(rows, m) * binomial(cols, m);
  if (total > 10000000)
    throw cap_error("check_tp: " + total.get_str() + " minors exceed the 10^7 cap");
}

template <class MinorFn>
TpCheckReport tp_enumerate(int rows, int cols, int maxOrder, const Real& tol, MinorFn&& minorAt) {
  TpCheckReport rep;
  rep.maxOrder = maxOrder;
  Real nearBand = Real(1000l) * tol;
  bool first = true;
  for (int m = 1; m <= maxOrder; ++m) {
    std::vector<int> ri(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) ri[size_t(i)] = i;
    do {
      std::vector<int> ci(static_cast<size_t>(m));
      for (int j = 0; j < m; ++j) ci[size_t(j)] = j;
      do {
        Real v = minorAt(ri, ci);
        ++rep.minorCount;
        if (first || v < rep.minMinor) {
          rep.minMinor = v;
          rep.minOrder = m;
          rep.minRows.assign(ri.begin(), ri.end());
          rep.minCols.assign(ci.begin(), ci.end());
          for (int& r : rep.minRows) ++r;  // report 1-based
          for (int& c : rep.minCols) ++c;
          first = false;
        }
        if (v < -tol) ++rep.negativeCount;
        if (abs(v) < nearBand) ++rep.nearZeroCount;
      } while (next_comb(ci, cols));
    } while (next_comb(ri, rows));
  }
  return rep;
}

}  // namespace

TpCheckReport check_tp(const Mat<Real>& m, int maxOrder, const Real& tol) {
  int lim = std::min(m.rows(), m.cols());
  if (maxOrder < 1 || maxOrder > lim)
    throw domain_error("check_tp: order must be in [1, min(rows, cols)]");
  guard_minor_count(m.rows(), m.cols(), maxOrder);
  return tp_enumerate(m.rows(), m.cols(), maxOrder, tol,
                      [&](const std::vector<int>& ri, const std::vector<int>& ci) {
                        return minor_det(m, ri, ci);
                      });
}

TpCheckReport check_tp_band(int n, const AlphaParam& a, const Real& tol, bool rigorous) {
  BandMatrix bm = band_matrix(n);
  Mat<Real> m = bm.evaluate(a);
  guard_minor_count(m.rows(), m.cols(), n);
  if (!rigorous) return check_tp(m, n, tol);
  AlphaParam hi = a.at_prec(2 * a.precision_bits());
  Mat<Real> mh = bm.evaluate(hi);
  Real nearBand = Real(1000l) * tol;
  TpCheckReport rep = tp_enumerate(m.rows(), m.cols(), n, tol,
                                   [&](const std::vector<int>& ri, const std::vector<int>& ci) {
                                     Real v = minor_det(m, ri, ci);
                                     if (abs(v) < nearBand) v = minor_det(mh, ri, ci);
                                     return v;
                                   });
  rep.rigorous = true;
  return rep;
}

// ---------------------------------------------------------------------------

std::vector<Real> XyGrid::points(mpfr_prec_t prec) const {
  if (!(lo > 0.0) || !(hi >= lo)) throw domain_error("XyGrid: need 0 < lo <= hi");
  if (steps < 1 || steps > 4096) throw domain_error("XyGrid: steps must be in [1, 4096]");
  std::vector<Real> pts;
  pts.reserve(size_t(steps));
  Real l(lo, prec), h(hi, prec);
  pts.push_back(l);
  if (steps == 1) return pts;
  Real ratio = exp(log(h / l) / Real(long(steps - 1)));
  for (int t = 1; t < steps; ++t) pts.push_back(pts.back() * ratio);
  return pts;
}

Conj1Report scan_conjecture1(int n, const std::vector<AlphaParam>& alphaGrid, const XyGrid& grid) {
  if (n < 1 || n > 6) throw domain_error("scan_conjecture1: order must be in [1, 6]");
  Conj1Report rep;
  rep.n = n;
  bool first = true, firstId = true;
  for (const AlphaParam& a : alphaGrid) {
    mpfr_prec_t P = a.precision_bits();
    Real bound = Real(1l).at_prec(P) / Real(long(n));
    if (a.alpha() > bound) continue;  // claim covers alpha <= 1/n only
    std::vector<Real> pts = grid.points(P);
    for (int k = 0; k <= mu_max(n); ++k)
      for (const Real& x : pts)
        for (const Real& y : pts) {
          FnkValue f = f_nk(a, n, k, x, y);
          ++rep.pointsChecked;
          if (first || f.value < rep.minValue) {
            rep.minValue = f.value;
            rep.minAlpha = a.alpha();
            rep.minX = x;
            rep.minY = y;
            rep.minK = k;
            first = false;
          }
          if (f.value.sign() <= 0) {
            ++rep.counterexampleCount;
            if (rep.certificates.size() < 32)
              rep.certificates.push_back({a.alpha(), k, x, y, f.value});
          }
        }
    if (n == 4 || n == 5) {
      std::vector<int> ks = n == 4 ? std::vector<int>{1} : std::vector<int>{1, 2, 3};
      for (int k : ks)
        for (const Real& x : pts)
          for (const Real& y : pts) {
            Real r = decomposition_residual(a, n, k, x, y);
            ++rep.identityChecks;
            if (firstId || r > rep.identityMaxRel) {
              rep.identityMaxRel = r;
              firstId = false;
            }
          }
    }
  }
  return rep;
}

TheoremScanReport scan_theorem(int n, const std::vector<AlphaParam>& alphaGrid, const XyGrid& grid) {
  if (n < 1 || n > 6) throw domain_error("scan_theorem: order must be in [1, 6]");
  TheoremScanReport rep;
  rep.n = n;
  mpfr_prec_t P0 = alphaGrid.empty() ? Real::default_prec() : alphaGrid.front().precision_bits();
  Real recipN = Real(1l).at_prec(P0) / Real(long(n));
  long d = long(n) * n - n - 6;
  rep.threshold = recipN;
  if (d > 0) {
    Real partC = Real(1l).at_prec(P0) / Real(d);
    if (partC < rep.threshold) rep.threshold = partC;
  }
  rep.ratios = grid.points(P0);
  for (const AlphaParam& a : alphaGrid) {
    mpfr_prec_t P = a.precision_bits();
    Real al = a.alpha();
    Real one = Real(1l).at_prec(P);
    Real zeroTol = ldexp(one, -long(P) / 2);
    // sign row of the order-n value along y/x (x pinned to 1)
    std::string row;
    for (const Real& r : rep.ratios) {
      Real v = delta(a, n, one, r.at_prec(P), DeltaRoute::kLascoux).value;
      if (abs(v) < zeroTol)
        row += '0';
      else
        row += v.sign() > 0 ? '+' : '-';
    }
    rep.rowAlpha.push_back(al);
    rep.rowSigns.push_back(row);
    if (al < rep.threshold) {
      // below the strict-positivity threshold every order up to n must be
      // positive at every grid point
      std::vector<Real> pts = grid.points(P);
      for (int m = 1; m <= n; ++m)
        for (const Real& x : pts)
          for (const Real& y : pts) {
            Real v = delta(a, m, x, y, DeltaRoute::kLascoux).value;
            ++rep.positivePoints;
            if (v.sign() <= 0) {
              ++rep.positiveViolations;
              if (rep.violations.size() < 32) rep.violations.push_back({al, m, x, y, v});
            }
          }
    } else if (al > recipN) {
      // past 1/n the kernel must fail total positivity at some order <= n;
      // the witness order is floor(1/alpha) + 1, where the origin value goes
      // negative (skip exact reciprocals, which sit on the boundary)
      bool reciprocal = a.is_rational() && a.num() == 1;
      if (!reciprocal) {
        long mstar = floor(one / al).to_long() + 1;
        if (mstar >= 2 && mstar <= n) {
          ++rep.originChecks;
          Real v = delta_at_origin(a, int(mstar));
          if (v.sign() >= 0) {
            ++rep.originFailures;
            if (rep.violations.size() < 32)
              rep.violations.push_back({al, int(mstar), Real(0l), Real(0l), v});
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace tplab
