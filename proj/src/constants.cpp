// SPDX-License-Identifier: Apache-2.0
#include "rmtgap/constants.hpp"

#include <stdexcept>

#include "rmtgap/big_float.hpp"

namespace rmtgap {

namespace {

BigFloat k_ln_k_sum(int N) {
  BigFloat s(0.0);
  for (int k = 2; k <= N; ++k) s += BigFloat(k) * log(BigFloat(k));
  return s;
}

// (N^2/2 + N/2 + 1/12) ln N - N^2/4
BigFloat main_term(int N) {
  const BigFloat n(N);
  return (n * n / BigFloat(2.0) + n / BigFloat(2.0) + BigFloat(1.0) / BigFloat(12.0)) * log(n) -
         n * n / BigFloat(4.0);
}

// zeta'(-1) estimate with Euler-Maclaurin tail terms through `depth`
// (depth counts Bernoulli corrections beyond B_2; 2 = through B_6).
BigFloat zeta_prime_em(int N, int depth) {
  const BigFloat n(N);
  BigFloat z = BigFloat(1.0) / BigFloat(12.0) - (k_ln_k_sum(N) - main_term(N));
  // tail(N) = 1/(720 N^2) - 1/(5040 N^4) + 1/(10080 N^6) - 1/(9504 N^8) + ...
  const double coeff[] = {720.0, -5040.0, 10080.0, -9504.0};
  BigFloat npow = n * n;
  for (int j = 0; j < depth && j < 4; ++j) {
    z += BigFloat(1.0) / (BigFloat(coeff[j]) * npow);
    npow *= n * n;
  }
  return z;
}

}  // namespace

ZetaPrimeResult zeta_prime_minus1(int n_terms, const PrecisionConfig& prec) {
  if (n_terms < 10) throw std::invalid_argument("zeta_prime_minus1: n_terms must be >= 10");
  ScopedPrecision guard(PrecisionConfig::digits(std::max(prec.decimal_digits, 30)).mantissa_bits());
  const BigFloat z = zeta_prime_em(n_terms, 2);
  ZetaPrimeResult out;
  out.value = z.to_double();
  out.terms_used = n_terms;
  // first omitted correction plus the summation roundoff floor
  const double N = n_terms;
  const double sum_magnitude = N * N * std::log(N) / 2.0;
  out.tail_bound = 1.0 / (10080.0 * std::pow(N, 6)) +
                   N * sum_magnitude * BigFloat::eps().to_double();
  return out;
}

double widom_dyson_c0(const PrecisionConfig& prec) {
  ScopedPrecision guard(PrecisionConfig::digits(std::max(prec.decimal_digits, 30)).mantissa_bits());
  static thread_local double cached = 0.0;
  static thread_local bool have = false;
  if (!have) {
    const BigFloat zp = zeta_prime_em(10000, 2);
    cached = (BigFloat::ln2() / BigFloat(12.0) + BigFloat(3.0) * zp).to_double();
    have = true;
  }
  return cached;
}

double k_ln_k_residual(int N) {
  if (N < 2) throw std::invalid_argument("k_ln_k_residual: N must be >= 2");
  ScopedPrecision guard(PrecisionConfig::digits(40).mantissa_bits());
  const BigFloat zp = zeta_prime_em(10000, 2);
  const BigFloat r = k_ln_k_sum(N) - (main_term(N) + BigFloat(1.0) / BigFloat(12.0) - zp);
  return r.to_double();
}

}  // namespace rmtgap
