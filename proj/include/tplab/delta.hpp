#pragma once

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "tplab/alpha.hpp"
#include "tplab/linalg.hpp"
#include "tplab/real.hpp"

namespace tplab {

// Independent evaluation strategies for the derivative determinant
//   delta_n(x,y) = det[ d^{i+j-2} K / dx^{i-1} dy^{j-1} ], i,j = 1..n.
enum class DeltaRoute { kFd, kWronskian, kSchur, kLascoux, kAsm };

const char* route_name(DeltaRoute r);
bool route_from_name(const std::string& name, DeltaRoute& out);
const std::vector<DeltaRoute>& all_routes();

struct RouteMeta {
  Real epsilonUsed = Real(0l);   // fd: smallest ladder step
  int truncationK = -1;          // schur: last shell index summed
  long termCount = 0;            // shells / weight classes / ladder rungs
  long internalPrec = 0;         // bits actually used internally
};

struct RouteResult {
  Real value;
  DeltaRoute route = DeltaRoute::kFd;
  Real errorEstimate;  // absolute, >= 0
  RouteMeta meta;
};

// r-th y-derivative of the kernel as a closed finite sum in
// Q = y + x cos(pi a) and K itself.  Allows y = 0 (the boundary value).
Real t_kernel(const AlphaParam& a, int r, const Real& x, const Real& y);

// j-th x-derivative of t_kernel(r) at (1, 0+): finite differences vs the
// closed form (-1)^j (r+j+1)!/(r+1)! * t_kernel(r)(1,0+).  Returns (fd, closed).
std::pair<Real, Real> t_xderiv_check(const AlphaParam& a, int r, int j);

RouteResult delta(const AlphaParam& a, int n, const Real& x, const Real& y, DeltaRoute route);

// delta at (1, 0+): superfactorial(n-1)^2 * U_1 ... U_n.
Real delta_at_origin(const AlphaParam& a, int n);

// delta on the diagonal:
//   sf(n-1)^2 / (2 x cos(pi a/2))^{n(n+1)} * sum_k #{mu=k} (4 sin^2(pi a/2))^k,
// where #{mu=k} counts alternating sign matrices by number of -1 entries.
// Strictly positive for a in [0,1).  n <= 7.
Real delta_diagonal(const AlphaParam& a, int n, const Real& x);

// Factor matrices of the polynomial-times-power decomposition
//   delta = sf(n-1)^2 K^{n^2} det[ A_n(x) B_n(y) ]:
// A_n(x) is n x (2n-1) with (i,k) entry binom(n+k-1-i, k-i) x^{k-i};
// B_n(y) is (2n-1) x n with (k,j) entry binom(n, n-k+j-1) U_{k+2-2j} y^{n-k+j-1}.
Mat<Real> lascoux_a(int n, const Real& x);
Mat<Real> lascoux_b(const AlphaParam& a, int n, const Real& y);
Mat<mpz_class> lascoux_a_exact(int n);  // A_n(1), exact

// Maximal minor of A_n(1) on columns sigma (1 <= s_1 < ... < s_n <= 2n-1):
// product formula prod_{i<j}(s_j - s_i) / sf(n-1), and an independent direct
// determinant of the same minor for cross-checking.
mpz_class a_sigma(int n, const std::vector<int>& sigma);
mpz_class a_sigma_minor(int n, const std::vector<int>& sigma);

// Maximal minor of B_n(1) on rows sigma.
Real b_sigma(const AlphaParam& a, int n, const std::vector<int>& sigma);

// Series shells of the expansion delta = x^{-n(n+1)} sum_k (-y/x)^k shell_k:
//   shell_k = sum over weakly increasing mu_1 <= ... <= mu_n with |mu| = k of
//             (prod_i U_{i+mu_i}) * prod_{i<j} (mu_j - mu_i + j - i)^2.
// schur_shell_enumerated sums partitions literally (test oracle, small k);
// schur_shells produces shells 0..kmax via the order-2n^2 linear recurrence
// whose coefficients come from (1 - 2 cos(pi a) s + s^2)^{n^2}.
Real schur_shell_enumerated(const AlphaParam& a, int n, int k);
std::vector<Real> schur_shells(const AlphaParam& a, int n, int kmax);

}  // namespace tplab
