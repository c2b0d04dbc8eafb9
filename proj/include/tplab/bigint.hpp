#pragma once

#include <gmpxx.h>

namespace tplab {

mpz_class factorial(long n);

// binom(n, k); zero outside 0 <= k <= n, so call sites can index freely.
mpz_class binomial(long n, long k);

// sf(k) = 1! * 2! * ... * k!, sf(0) = 1.
mpz_class superfactorial(long k);

}  // namespace tplab
