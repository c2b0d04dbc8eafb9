#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tplab/alpha.hpp"
#include "tplab/linalg.hpp"
#include "tplab/real.hpp"

namespace tplab {

// Strictly increasing tuple of strictly positive points; the shape every
// kernel-matrix operation expects.
struct PointTuple {
  std::vector<Real> v;

  static PointTuple of(std::vector<Real> xs);  // validates, throws domain_error
  int size() const { return int(v.size()); }
  const Real& operator[](int i) const { return v[size_t(i)]; }
};

// prod_{i<j} (x_j - x_i); 1 for tuples of size < 2.
Real vandermonde(const PointTuple& x);

// 1/(x^2 + 2 cos(pi a) x y + y^2); throws on x,y <= 0 or on a pole
// (only reachable when cos(pi a) <= -1 allows the quadratic to vanish).
Real eval_kernel(const AlphaParam& a, const Real& x, const Real& y);

// det [ K(x_i, y_j) ]_{n x n}
Real det_kernel_matrix(const AlphaParam& a, const PointTuple& x, const PointTuple& y);

// Cauchy determinant: returns (det[1/(x_i+y_j)], closed form V_x V_y / prod(x_i+y_j)).
std::pair<Real, Real> cauchy_check(const PointTuple& x, const PointTuple& y);

// Borchardt identity on M = [1/(x_i+y_j)]: returns
// (det[1/(x_i+y_j)^2],  det(M) * perm(M)); the two must agree.
std::pair<Real, Real> borchardt_check(const PointTuple& x, const PointTuple& y);

// det [ K(x_i, x_j) ] -- Gram matrix of the kernel against itself.
Real gram_determinant(const AlphaParam& a, const PointTuple& x);

enum class ScanMode { kLogUniform, kClustered };

struct TpScanReport {
  int maxOrder = 0;
  int samplesPerOrder = 0;
  uint64_t seed = 0;
  ScanMode mode = ScanMode::kLogUniform;
  double logMin = 0, logMax = 0;       // natural-log bounds of the point range
  Real minMinor;                        // most negative (or least positive) det seen
  int minOrder = 0;                     // order achieving minMinor
  long minSample = -1;                  // sample index achieving it
  std::vector<Real> minByOrder;         // [order-1] -> min det at that order
  std::vector<Real> witnessX, witnessY; // tuples achieving minMinor
  long negativeCount = 0;               // dets strictly below -2^(16-prec) noise floor
};

// Randomized positivity scan of det[K(x_i,y_j)] for orders 1..maxOrder.
// Deterministic for fixed (seed, parameters): every sample derives its own
// RNG stream from (seed, order, sample index).  Clustered mode draws nearly
// coincident geometric tuples (ratio 1+eps, eps down to 2^-30) to stress the
// confluent regime where minors collapse to zero.
TpScanReport tp_scan(const AlphaParam& a, int maxOrder, int samplesPerOrder,
                     uint64_t seed, double logMin, double logMax,
                     ScanMode mode = ScanMode::kLogUniform);

// Density sin(pi a)/(2 pi a (cosh x + cos pi a)) for 0 <= a < 1
// (a = 0 degenerates to 1/(2(cosh x + 1))).
Real eval_logistic(const AlphaParam& a, const Real& x);

// Moment generating function check for the density above: returns
// (numeric integral of e^{sx} g_a(x), closed form sin(pi a s)/(a sin(pi s))).
// Requires |s| < 1.
std::pair<Real, Real> logistic_mgf_check(const AlphaParam& a, const Real& s);

}  // namespace tplab
