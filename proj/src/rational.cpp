// SPDX-License-Identifier: Apache-2.0
#include "rmtgap/rational.hpp"

#include <mpfr.h>

namespace rmtgap {

namespace {
std::string z_to_string(mpz_srcptr z) {
  char* s = mpz_get_str(nullptr, 10, z);
  std::string out(s);
  void (*freef)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freef);
  freef(s, out.size() + 1);
  return out;
}
}  // namespace

std::string RationalValue::numerator() const { return z_to_string(mpq_numref(q_)); }

std::string RationalValue::denominator() const { return z_to_string(mpq_denref(q_)); }

std::string RationalValue::str() const {
  if (mpz_cmp_ui(mpq_denref(q_), 1) == 0) return numerator();
  return numerator() + "/" + denominator();
}

double RationalValue::log() const {
  // ln(p/q) = ln p - ln q at 192 bits: the log is well conditioned, so the
  // operands need not be held exactly.
  mpfr_t a, b;
  mpfr_init2(a, 192);
  mpfr_init2(b, 192);
  mpfr_set_z(a, mpq_numref(q_), MPFR_RNDN);
  mpfr_set_z(b, mpq_denref(q_), MPFR_RNDN);
  mpfr_log(a, a, MPFR_RNDN);
  mpfr_log(b, b, MPFR_RNDN);
  mpfr_sub(a, a, b, MPFR_RNDN);
  double out = mpfr_get_d(a, MPFR_RNDN);
  mpfr_clear(a);
  mpfr_clear(b);
  return out;
}

bool RationalValue::reduced() const {
  if (mpz_sgn(mpq_denref(q_)) <= 0) return false;
  mpz_t g;
  mpz_init(g);
  mpz_gcd(g, mpq_numref(q_), mpq_denref(q_));
  bool ok = mpz_cmp_ui(g, 1) == 0;
  mpz_clear(g);
  return ok;
}

}  // namespace rmtgap
