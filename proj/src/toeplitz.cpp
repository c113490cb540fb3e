// SPDX-License-Identifier: Apache-2.0
#include "rmtgap/toeplitz.hpp"

#include <gmp.h>

#include "rmtgap/constants.hpp"
#include "rmtgap/quadrature.hpp"

namespace rmtgap {

double symbol_entry(int k, double alpha) {
  if (!(alpha > 0.0) || alpha > M_PI)
    throw std::invalid_argument("symbol_entry: alpha must lie in (0, pi]");
  if (k == 0) return 1.0 - alpha / M_PI;
  const double kk = std::abs(k);
  return -std::sin(kk * alpha) / (M_PI * kk);
}

int recommended_digits(int n, double alpha) {
  // The factorization error is governed by the smallest eigenvalue, which
  // decays like exp(-n ln((1+s)/(1-s))), s = sin(alpha/2) -- much faster
  // than the last pivot D_{n+1}/D_n ~ cos^{2n+1}(alpha/2).  The +30 covers
  // the subexponential prefactor (thresholds measured 20-30 digits inside).
  const double s = std::sin(alpha / 2);
  const double lam_digits = n * std::log((1.0 + s) / (1.0 - s)) / std::log(10.0);
  if (lam_digits <= 10.0) return 15;
  return static_cast<int>(std::ceil(lam_digits)) + 30;
}

LogDetResult log_det(const ArcEnsemble& ens, const PrecisionConfig& prec) {
  if (ens.alpha >= M_PI)
    throw std::invalid_argument("log_det: determinant vanishes at alpha = pi; use small_beta_logdet");
  LogDetResult out;
  double max_entry = 0.0;
  if (prec.is_native()) {
    auto trail = detail::toeplitz_ldlt<double>(ens.n, detail::symbol_row<double>(ens.n, ens.alpha));
    out.log_det = trail.log_det_wide;
    out.pivots = std::move(trail.pivots);
    max_entry = trail.max_entry;
  } else {
    ScopedPrecision guard(prec.mantissa_bits());
    auto trail =
        detail::toeplitz_ldlt<BigFloat>(ens.n, detail::symbol_row<BigFloat>(ens.n, BigFloat(ens.alpha)));
    out.log_det = trail.log_det_wide.to_double();
    out.pivots = std::move(trail.pivots);
    max_entry = trail.max_entry;
  }
  out.min_pivot = *std::min_element(out.pivots.begin(), out.pivots.end());
  out.precision_ok = out.min_pivot >= 1e3 * prec.epsilon * max_entry;
  return out;
}

double ratio_next(const ArcEnsemble& ens, const PrecisionConfig& prec) {
  const LogDetResult r = log_det(ArcEnsemble(ens.n + 1, ens.alpha), prec);
  return r.pivots.back();
}

double multiple_integral_oracle(int n, double alpha, int quad_order) {
  if (n < 1 || n > 3)
    throw std::invalid_argument("multiple_integral_oracle: n must be 1, 2 or 3");
  if (!(alpha > 0.0) || alpha >= M_PI)
    throw std::invalid_argument("multiple_integral_oracle: alpha must lie in (0, pi)");
  if (n == 1) return 1.0 - alpha / M_PI;

  const auto rule = mapped(gauss_legendre<double>(quad_order), alpha, 2.0 * M_PI - alpha);
  const int m = rule.order;
  const double two_pi = 2.0 * M_PI;
  auto pair_factor = [](double ti, double tj) { return 2.0 - 2.0 * std::cos(ti - tj); };

  double sum = 0.0;
  if (n == 2) {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        sum += rule.weights[i] * rule.weights[j] * pair_factor(rule.nodes[i], rule.nodes[j]);
    return sum / (two_pi * two_pi * 2.0);
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const double pij = pair_factor(rule.nodes[i], rule.nodes[j]);
      double inner = 0.0;
      for (int k = 0; k < m; ++k)
        inner += rule.weights[k] * pair_factor(rule.nodes[i], rule.nodes[k]) *
                 pair_factor(rule.nodes[j], rule.nodes[k]);
      sum += rule.weights[i] * rule.weights[j] * pij * inner;
    }
  return sum / (two_pi * two_pi * two_pi * 6.0);
}

RationalValue legendre_norm(int k) {
  if (k < 0) throw std::invalid_argument("legendre_norm: k must be >= 0");
  // 2^{2k+1} (k!)^4 / ((2k)!)^2 / (2k+1)
  RationalValue h;
  mpz_t num, den, fac;
  mpz_inits(num, den, fac, nullptr);
  mpz_ui_pow_ui(num, 2, 2 * static_cast<unsigned long>(k) + 1);
  mpz_fac_ui(fac, static_cast<unsigned long>(k));
  mpz_pow_ui(fac, fac, 4);
  mpz_mul(num, num, fac);
  mpz_fac_ui(den, 2 * static_cast<unsigned long>(k));
  mpz_pow_ui(den, den, 2);
  mpz_mul_ui(den, den, 2 * static_cast<unsigned long>(k) + 1);
  mpz_set(mpq_numref(h.raw()), num);
  mpz_set(mpq_denref(h.raw()), den);
  mpq_canonicalize(h.raw());
  mpz_clears(num, den, fac, nullptr);
  return h;
}

RationalValue a_n(int n) {
  if (n < 1) throw std::invalid_argument("a_n: n must be >= 1");
  RationalValue prod(1, 1);
  // h_k = h_{k-1} * k^2/(4k^2 - 1), h_0 = 2
  RationalValue h(2, 1);
  prod *= h;
  for (int k = 1; k < n; ++k) {
    h *= RationalValue(static_cast<unsigned long>(k) * k, 4ul * k * k - 1ul);
    prod *= h;
  }
  return prod;
}

double small_beta_logdet(int n, double beta) {
  if (n < 1) throw std::invalid_argument("small_beta_logdet: n must be >= 1");
  if (!(beta > 0.0) || beta >= M_PI)
    throw std::invalid_argument("small_beta_logdet: beta must lie in (0, pi)");
  return n * static_cast<double>(n) * std::log(beta) - n * std::log(2.0 * M_PI) + a_n(n).log();
}

double a_n_asymptotic_residual(int n, const PrecisionConfig& prec) {
  const double c0 = widom_dyson_c0(prec);
  const double predicted =
      c0 - 0.25 * std::log(static_cast<double>(n)) + n * std::log(2.0 * M_PI) -
      static_cast<double>(n) * n * std::log(2.0);
  return a_n(n).log() - predicted;
}

}  // namespace rmtgap
