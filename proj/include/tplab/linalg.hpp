#pragma once

#include <utility>
#include <vector>

#include <gmpxx.h>

#include "tplab/complexhp.hpp"
#include "tplab/errors.hpp"
#include "tplab/real.hpp"

namespace tplab {

template <class T>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int r, int c) : rows_(r), cols_(c), a_(size_t(r) * size_t(c)) {}
  Mat(int r, int c, const T& fill) : rows_(r), cols_(c), a_(size_t(r) * size_t(c), fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

 private:
  int rows_, cols_;
  std::vector<T> a_;
};

template <class T>
Mat<T> matmul(const Mat<T>& a, const Mat<T>& b) {
  if (a.cols() != b.rows()) throw domain_error("matmul: inner dimensions differ");
  Mat<T> c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      T s = a(i, 0) * b(0, j);
      for (int k = 1; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

namespace detail {
inline Real pivot_size(const Real& x) { return abs(x); }
inline Real pivot_size(const Complex& z) { return norm2(z); }
}  // namespace detail

// Determinant by Gaussian elimination with full pivoting.  Works for Real and
// Complex entries; pivots are chosen by |entry| (squared modulus for complex),
// which keeps the elimination stable enough that precision is the only knob
// callers ever need to turn.
template <class T>
T det(Mat<T> m) {
  if (m.rows() != m.cols()) throw domain_error("det: matrix not square");
  const int n = m.rows();
  if (n == 0) return T(Real(1l));
  int sign = 1;
  T acc = T(Real(1l).at_prec(detail::pivot_size(m(0, 0)).prec()));
  for (int k = 0; k < n; ++k) {
    int pi = k, pj = k;
    Real best = detail::pivot_size(m(k, k));
    for (int i = k; i < n; ++i)
      for (int j = k; j < n; ++j) {
        Real s = detail::pivot_size(m(i, j));
        if (s > best) { best = s; pi = i; pj = j; }
      }
    if (best.is_zero()) return T(Real(0l).at_prec(best.prec()));
    if (pi != k) {
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(pi, j));
      sign = -sign;
    }
    if (pj != k) {
      for (int i = 0; i < n; ++i) std::swap(m(i, k), m(i, pj));
      sign = -sign;
    }
    acc = acc * m(k, k);
    for (int i = k + 1; i < n; ++i) {
      T f = m(i, k) / m(k, k);
      for (int j = k + 1; j < n; ++j) m(i, j) = m(i, j) - f * m(k, j);
    }
  }
  return sign < 0 ? -acc : acc;
}

// Exact integer determinant (Bareiss fraction-free elimination).
inline mpz_class det_exact(Mat<mpz_class> m) {
  if (m.rows() != m.cols()) throw domain_error("det_exact: matrix not square");
  const int n = m.rows();
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) mpz_swap(m(k, j).get_mpz_t(), m(p, j).get_mpz_t());
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        mpz_class t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign < 0 ? mpz_class(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

// Permanent via the Ryser inclusion-exclusion sum, visiting column subsets in
// Gray-code order so each step only adjusts the running row sums by one
// column.  2^n * n work; hard-capped because the cost doubles per row.
inline Real permanent(const Mat<Real>& m) {
  if (m.rows() != m.cols()) throw domain_error("permanent: matrix not square");
  const int n = m.rows();
  if (n == 0) return Real(1l);
  if (n > 20) throw cap_error("permanent: order capped at 20");
  mpfr_prec_t prec = m(0, 0).prec();
  std::vector<Real> rowsum(size_t(n), Real::zero(prec));
  Real total = Real::zero(prec);
  uint64_t gray = 0;
  const uint64_t end = uint64_t(1) << n;
  for (uint64_t idx = 1; idx < end; ++idx) {
    uint64_t next = idx ^ (idx >> 1);
    uint64_t changed = gray ^ next;
    int j = __builtin_ctzll(changed);
    bool added = (next & changed) != 0;
    for (int i = 0; i < n; ++i)
      rowsum[i] = added ? rowsum[i] + m(i, j) : rowsum[i] - m(i, j);
    gray = next;
    Real prod = rowsum[0];
    for (int i = 1; i < n; ++i) prod *= rowsum[i];
    int popcount = __builtin_popcountll(next);
    if ((n - popcount) & 1) total -= prod; else total += prod;
  }
  return total;
}

}  // namespace tplab
