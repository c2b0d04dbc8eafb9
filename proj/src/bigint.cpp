#include "tplab/bigint.hpp"

#include "tplab/errors.hpp"

namespace tplab {

mpz_class factorial(long n) {
  if (n < 0) throw domain_error("factorial: negative argument");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

mpz_class binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

mpz_class superfactorial(long k) {
  if (k < 0) throw domain_error("superfactorial: negative argument");
  mpz_class r = 1;
  mpz_class f = 1;
  for (long i = 1; i <= k; ++i) {
    f *= i;
    r *= f;
  }
  return r;
}

}  // namespace tplab
