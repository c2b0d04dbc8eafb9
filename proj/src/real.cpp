#include "tplab/real.hpp"

#include <cstdio>
#include <cstdlib>
#include <cmath>

namespace tplab {

namespace {
mpfr_prec_t g_default_prec = 256;
}

mpfr_prec_t Real::default_prec() { return g_default_prec; }

void Real::set_default_prec(mpfr_prec_t p) {
  g_default_prec = p < MPFR_PREC_MIN ? MPFR_PREC_MIN : p;
}

std::string Real::dec(int digits10) const {
  if (digits10 <= 0) {
    // Enough digits to identify the value at this precision: ceil(p log10 2)+2.
    digits10 = int(std::ceil(double(prec()) * 0.30102999566398119521)) + 2;
  }
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rg", digits10, v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

std::string Real::hex() const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%Ra", v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

}  // namespace tplab
