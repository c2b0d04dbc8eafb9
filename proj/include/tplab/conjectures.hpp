#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "tplab/alpha.hpp"
#include "tplab/linalg.hpp"
#include "tplab/real.hpp"

namespace tplab {

// Integer linear combination of the values U_m (m >= 1).  Indices m <= 0 are
// folded away on insertion via U_0 = 0 and U_{-m} = -U_m, so equality of
// combos is plain map equality.
struct ChebCombo {
  std::map<long, mpz_class> c;

  void add(long m, const mpz_class& coeff);
  bool is_zero() const { return c.empty(); }
  bool operator==(const ChebCombo& o) const { return c == o.c; }
  bool operator!=(const ChebCombo& o) const { return !(*this == o); }
  Real evaluate(const AlphaParam& a) const;
  std::string str() const;  // "U3 + 9*U1", "0"
};

// Band matrix with entries sum_{j=i}^n binom(n,j) binom(n,k-j) U_{2j-k}
// (row i = 1..n, column k = 1..2n-1).  Entries vanish off the band
// i <= k <= n-1+i; construction asserts that and the persymmetry
// entry(i,k) = entry(n+1-i, 2n-k).
struct BandMatrix {
  int n = 0;
  std::vector<ChebCombo> e;  // row-major, n x (2n-1)

  const ChebCombo& at(int i, int k) const {  // 1-based
    return e[size_t(i - 1) * (2 * n - 1) + size_t(k - 1)];
  }
  Mat<Real> evaluate(const AlphaParam& a) const;
};

BandMatrix band_matrix(int n);  // 1 <= n <= 12

// The explicit row transform tying maximal minors of the degree-matrix factor
// to band-matrix minors: T[i][j] = binom(n,j) for j >= i applied to the
// 180-degree rotation of B_n(1)^T.  The audit checks T * base == band_matrix
// as exact combos; the minor map sends row set sigma of B_n(1) to column set
// {2n - s : s in sigma} of the band matrix, scaled by prod_i binom(n,i).
bool band_transform_audit(int n);
mpz_class band_transform_factor(int n);
std::vector<int> band_sigma_columns(int n, const std::vector<int>& sigma);

// ---------------------------------------------------------------------------

struct FnkValue {
  Real value;
  Real imagResidue;
  int n = 0;
  int k = 0;
};

// F_{n,k}(x,y) = sum over ASMs with mu(A) = k of Q^{2 nu(A)} Qbar^{n(n-1)-2nu(A)-2k},
// Q = e^{i pi a/2} x + e^{-i pi a/2} y.  Real by the quarter-turn pairing;
// the imaginary residue is returned, not discarded.  n <= 7.
FnkValue f_nk(const AlphaParam& a, int n, int k, const Real& x, const Real& y);

// Closed product for k = 0: prod_{i=1..n} (Qbar^{2i} - Q^{2i})/(Qbar^2 - Q^2),
// with each quotient factor evaluated in its expanded form
// sum_{j=0}^{i-1} Q^{2j} Qbar^{2(i-1-j)} so the degenerate locus (x = y or
// a = 0, where numerator and denominator both vanish) needs no special case.
Real f_n0_closed(const AlphaParam& a, int n, const Real& x, const Real& y);

// Residual |f_nk - closed| / max(|closed|, tiny) for the decomposition
// identities at (n,k) in {(4,1),(5,1),(5,2),(5,3)}.
Real decomposition_residual(const AlphaParam& a, int n, int k, const Real& x, const Real& y);

// Coefficients c_0..c_{2n-2} of (Qbar^{2n} - Q^{2n})/(Qbar^2 - Q^2) as a
// bivariate polynomial in (x,y).  The quotient is sum_m Q^{2m} Qbar^{2(n-1-m)};
// expanding each term binomially gives c_i as an integer-weighted cosine sum,
// exact at every alpha (a = 0 gives n*binom(2n-2,i); the end coefficients are
// c_0 = c_{2n-2} = U_n, so they vanish at a = 1/n and the whole vector is
// strictly positive only for a < 1/n).  Palindromic: c_i = c_{2n-2-i}.
std::vector<Real> c_coefficients(const AlphaParam& a, int n);

// ---------------------------------------------------------------------------

struct TpCheckReport {
  int maxOrder = 0;
  long minorCount = 0;
  Real minMinor;
  int minOrder = 0;
  std::vector<int> minRows, minCols;  // 1-based witness of minMinor
  long negativeCount = 0;             // minors < -tol
  long nearZeroCount = 0;             // |minor| < 1000*tol (after refinement)
  bool rigorous = false;
};

// Evaluate every minor of M up to maxOrder (all row/column subsets in
// lexicographic order).  Refuses when the subset count exceeds 10^7.
TpCheckReport check_tp(const Mat<Real>& M, int maxOrder, const Real& tol);

// check_tp on band_matrix(n) evaluated at a; rigorous mode re-evaluates
// near-zero minors (|minor| < 1000*tol) at doubled precision before they are
// allowed to count as negative.
TpCheckReport check_tp_band(int n, const AlphaParam& a, const Real& tol, bool rigorous);

// ---------------------------------------------------------------------------

// Geometric evaluation grid for (x,y) scans.
struct XyGrid {
  double lo = 0.5;
  double hi = 2.0;
  int steps = 4;
  std::vector<Real> points(mpfr_prec_t prec) const;
};

struct GridPointIssue {
  Real alpha;
  int k = -1;
  Real x, y;
  Real value;
};

struct Conj1Report {
  int n = 0;
  long pointsChecked = 0;
  long counterexampleCount = 0;
  std::vector<GridPointIssue> certificates;  // first 32 kept
  Real minValue;
  Real minAlpha, minX, minY;
  int minK = -1;
  long identityChecks = 0;
  Real identityMaxRel;
};

// For every alpha in the grid with alpha <= 1/n, every k <= mu_max(n) and
// every grid pair (x,y): evaluate f_nk and certify positivity; also check the
// decomposition identities available at this n.  n <= 6.
Conj1Report scan_conjecture1(int n, const std::vector<AlphaParam>& alphaGrid, const XyGrid& grid);

struct TheoremScanReport {
  int n = 0;
  Real threshold;  // min(1/n, 1/(n^2-n-6) when positive)
  long positivePoints = 0;
  long positiveViolations = 0;
  std::vector<GridPointIssue> violations;  // first 32 kept
  long originChecks = 0;
  long originFailures = 0;
  std::vector<Real> ratios;           // heat-map columns: y/x
  std::vector<Real> rowAlpha;         // heat-map rows
  std::vector<std::string> rowSigns;  // '+', '-', '0' per ratio
};

// Sign survey of delta over (alpha, y/x): below the part-(c) threshold all
// sampled values must be positive; above 1/n (alpha not a reciprocal 1/m)
// the origin value at order floor(1/alpha)+1 must be negative.  n <= 6.
TheoremScanReport scan_theorem(int n, const std::vector<AlphaParam>& alphaGrid, const XyGrid& grid);

}  // namespace tplab
