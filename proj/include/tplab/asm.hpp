#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tplab/alpha.hpp"
#include "tplab/bigint.hpp"
#include "tplab/complexhp.hpp"
#include "tplab/kernel.hpp"

namespace tplab {

// n x n matrix over {-1,0,+1} whose rows and columns each sum to 1 with
// nonzero entries alternating in sign (so each line starts and ends with +1).
struct AsmMatrix {
  int n = 0;
  std::vector<int8_t> e;  // row-major, 0-based

  int at(int i, int j) const { return e[size_t(i) * n + j]; }
};

struct AsmStats {
  int mu = 0;   // number of -1 entries
  int inv = 0;  // generalized inversion number: sum_{i<k, l<j} a_{ij} a_{kl}
  int nu = 0;   // pair statistic with the second entry weakly left; = inv - mu
  int j = 0;    // zero cells whose running row and column sums agree
  std::vector<int> muRow, muCol;
};

bool is_valid_asm(const AsmMatrix& A);

// Depth-first enumeration, lexicographic by rows with entries ordered
// -1 < 0 < +1.  The callback receives a buffer reused between calls; copy it
// if it must outlive the visit.  n <= 8 (10,850,216 matrices).
void for_each_asm(int n, const std::function<void(const AsmMatrix&)>& fn);

std::vector<AsmMatrix> all_asms(int n);  // materialized; n <= 7
std::uint64_t asm_count(int n);

AsmStats asm_stats(const AsmMatrix& A);

// Anticlockwise 90-degree rotation; preserves validity and mu, and
// complements nu: 2 nu(A^Q) = n(n-1) - 2 nu(A) - 2 mu(A).
AsmMatrix quarter_turn(const AsmMatrix& A);

// Largest possible number of -1 entries: floor((n-1)^2 / 4).
int mu_max(int n);

// (mu, nu) -> count over all n x n ASMs; enumerated once and cached.
using StatsKey = std::pair<int, int>;
using GroupedCounts = std::map<StatsKey, std::int64_t>;
const GroupedCounts& group_by_stats(int n);

// Dense integer polynomial, index = degree.
struct IntPoly {
  std::vector<mpz_class> c;

  int degree() const { return int(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  mpz_class coeff(int i) const {
    return (i >= 0 && i < int(c.size())) ? c[size_t(i)] : mpz_class(0);
  }
  void set(int i, const mpz_class& v);
  void trim();
  mpz_class eval_one() const;               // value at 1
  Complex eval(const Complex& t) const;     // Horner
  std::string str(const std::string& var) const;
  bool operator==(const IntPoly& o) const { return c == o.c; }
};

// prod_{i=1..n} (1 + t + ... + t^{i-1}) -- inversion generating polynomial.
IntPoly q_factorial_poly(int n);

struct BivarPoly {
  // (degX, degY) -> coefficient
  std::map<std::pair<int, int>, mpz_class> c;
};

// Z_{n,k}(t) = sum over ASMs with mu = k of t^{nu}
IntPoly z_nk_poly(int n, int k);
// Z_n(x, y) = sum over ASMs of x^{nu} y^{mu}
BivarPoly z_bivariate(int n);

// Izergin-Korepin determinant det[ 1/((x_i+y_j)(q x_i+y_j)) ].
Complex ik_direct(const Complex& q, const PointTuple& x, const PointTuple& y);

// The same determinant as the weighted sum over ASMs (Propp's formula),
// prefactor V_X V_Y / prod (x_i+y_j)(q x_i+y_j).  n <= 7.
Complex ik_propp_sum(const Complex& q, const PointTuple& x, const PointTuple& y);

}  // namespace tplab
