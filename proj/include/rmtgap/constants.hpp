// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "rmtgap/precision.hpp"

namespace rmtgap {

struct ZetaPrimeResult {
  double value = 0.0;
  int terms_used = 0;
  double tail_bound = 0.0;  // dominates the first omitted correction
};

// zeta'(-1) from Euler-Maclaurin summation of sum_{k<=N} k ln k, solving
//   sum k ln k = (N^2/2 + N/2 + 1/12) ln N - N^2/4 + 1/12 - zeta'(-1) + o(1)
// with Bernoulli corrections through B_6.
ZetaPrimeResult zeta_prime_minus1(int n_terms, const PrecisionConfig& prec);
inline ZetaPrimeResult zeta_prime_minus1() {
  return zeta_prime_minus1(10000, PrecisionConfig::digits(40));
}

// c0 = (1/12) ln 2 + 3 zeta'(-1)
double widom_dyson_c0(const PrecisionConfig& prec);
inline double widom_dyson_c0() { return widom_dyson_c0(PrecisionConfig::digits(40)); }

// r(N) = sum_{k<=N} k ln k - [(N^2/2 + N/2 + 1/12) ln N - N^2/4 + 1/12 - zeta'(-1)]
double k_ln_k_residual(int N);

}  // namespace rmtgap
