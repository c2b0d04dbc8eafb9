#pragma once

#include "tplab/alpha.hpp"
#include "tplab/bigint.hpp"
#include "tplab/complexhp.hpp"

namespace tplab {

// U_k = sin(k pi a)/sin(pi a), i.e. the Chebyshev polynomial of the second
// kind U_{k-1}(cos pi a).  Defined for every integer k (odd in k); the
// integer-a degeneration is the k -> k*(-1)^... limit and rational a hits
// its zeros exactly.
Real cheb_u(const AlphaParam& a, long k);

// Same quantity from the three-term recurrence; independent implementation
// kept as a cross-check (k >= 0).
Real cheb_u_recurrence(const AlphaParam& a, long k);

// V_n = U_1 U_2 ... U_n (empty product for n = 0).
Real v_product(const AlphaParam& a, int n);

// [n]_q! = prod_{j=1..n} (1 - q^j)/(1 - q); factorial at q = 1.
Complex q_factorial(const Complex& q, int n);

}  // namespace tplab
