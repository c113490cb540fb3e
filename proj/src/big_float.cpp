// SPDX-License-Identifier: Apache-2.0
#include "rmtgap/big_float.hpp"

#include <cstdio>

namespace rmtgap {

namespace {
thread_local int g_default_bits = 128;
}

int BigFloat::default_bits() { return g_default_bits; }

void BigFloat::set_default_bits(int bits) {
  g_default_bits = bits < 53 ? 53 : bits;
}

std::string BigFloat::str(int digits) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rg", digits, v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

}  // namespace rmtgap
