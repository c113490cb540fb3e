// SPDX-License-Identifier: Apache-2.0
#include "rmtgap/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rmtgap/big_float.hpp"
#include "rmtgap/quadrature.hpp"
#include "rmtgap/rh_model.hpp"
#include "rmtgap/toeplitz.hpp"

namespace rmtgap {

Expansion widom_expansion(int n, double alpha, double c0) {
  if (!(alpha > 0.0) || !(alpha < M_PI))
    throw std::invalid_argument("widom_expansion: alpha must lie in (0, pi)");
  Expansion e;
  e.terms.emplace_back("n2_log_cos", static_cast<double>(n) * n * std::log(std::cos(alpha / 2)));
  e.terms.emplace_back("quarter_log_rho", -0.25 * std::log(n * std::sin(alpha / 2)));
  e.terms.emplace_back("c0", c0);
  e.remainder_order = "1/(n sin(alpha/2))";
  return e;
}

Expansion dyson_expansion(double s, double c0) {
  if (!(s > 0.0)) throw std::invalid_argument("dyson_expansion: s must be positive");
  Expansion e;
  e.terms.emplace_back("half_s2", -s * s / 2.0);
  e.terms.emplace_back("quarter_log_s", -0.25 * std::log(s));
  e.terms.emplace_back("c0", c0);
  e.remainder_order = "1/s";
  return e;
}

namespace {

ConstantFit richardson_fit(std::vector<std::pair<double, double>> samples, const char* what) {
  std::sort(samples.begin(), samples.end());
  if (samples.size() < 2)
    throw std::invalid_argument(std::string(what) + ": need at least two scales to extrapolate");
  if (!(samples.back().first >= 2.0 * samples.front().first))
    throw std::invalid_argument(std::string(what) + ": scale spread must be at least 2x");
  ConstantFit fit;
  fit.samples = samples;
  for (size_t i = 0; i + 1 < samples.size(); ++i) {
    const auto [s1, r1] = samples[i];
    const auto [s2, r2] = samples[i + 1];
    fit.extrapolants.push_back((s2 * r2 - s1 * r1) / (s2 - s1));
  }
  fit.estimate = fit.extrapolants.back();
  return fit;
}

}  // namespace

ConstantFit extract_c0_widom(const std::vector<std::pair<int, double>>& pairs) {
  std::vector<std::pair<double, double>> samples;
  for (const auto& [n, alpha] : pairs) {
    const ArcEnsemble ens(n, alpha);
    const LogDetResult det = log_det(ens);
    if (!det.precision_ok)
      throw NumericalFault("extract_c0_widom: determinant pivots below the precision floor");
    const double residual = det.log_det - static_cast<double>(n) * n * std::log(std::cos(alpha / 2)) +
                            0.25 * std::log(ens.rho());
    samples.emplace_back(ens.rho(), residual);
  }
  return richardson_fit(std::move(samples), "extract_c0_widom");
}

ConstantFit extract_c0_dyson(std::vector<double> s_values, const NystromConfig& cfg) {
  std::vector<std::pair<double, double>> samples;
  for (double s : s_values) {
    const double lp = log_det_gap(GapSpec(s), cfg);
    samples.emplace_back(s, lp + s * s / 2.0 + 0.25 * std::log(s));
  }
  return richardson_fit(std::move(samples), "extract_c0_dyson");
}

double first_derivative_law_residual(int n, double alpha) {
  const double h = 1e-4;
  const int digits = std::max(30, recommended_digits(n, alpha + 2 * h) + 12);
  ScopedPrecision guard(PrecisionConfig::digits(digits).mantissa_bits());
  const BigFloat a0(alpha);
  BigFloat hh(h);
  BigFloat d1[3];
  for (int lev = 0; lev < 3; ++lev) {
    d1[lev] = (detail::log_det_wide(n, a0 + hh) - detail::log_det_wide(n, a0 - hh)) /
              (BigFloat(2.0) * hh);
    hh /= BigFloat(2.0);
  }
  const BigFloat r1 = (BigFloat(4.0) * d1[1] - d1[0]) / BigFloat(3.0);
  const BigFloat r2 = (BigFloat(4.0) * d1[2] - d1[1]) / BigFloat(3.0);
  const double deriv = ((BigFloat(16.0) * r2 - r1) / BigFloat(15.0)).to_double();
  const double predicted =
      -0.5 * n * static_cast<double>(n) * std::tan(alpha / 2) - 0.125 / std::tan(alpha / 2);
  return std::abs(deriv - predicted);
}

double dinteg_residual(int n, double alpha, double alpha0, int grid) {
  if (!(alpha < alpha0) || !(alpha0 < M_PI))
    throw std::invalid_argument("dinteg_residual: need alpha < alpha0 < pi");
  if (grid < 16) throw std::invalid_argument("dinteg_residual: grid must be >= 16");

  // left side: (a0 - a) (ln D_n)'(a0) - ln D_n(a0) + ln D_n(a)
  const double h = 1e-4;
  const int digits = std::max(30, recommended_digits(n, alpha0 + 2 * h) + 12);
  double lhs;
  {
    ScopedPrecision guard(PrecisionConfig::digits(digits).mantissa_bits());
    const BigFloat a0(alpha0);
    BigFloat hh(h);
    BigFloat d1[2];
    for (int lev = 0; lev < 2; ++lev) {
      d1[lev] = (detail::log_det_wide(n, a0 + hh) - detail::log_det_wide(n, a0 - hh)) /
                (BigFloat(2.0) * hh);
      hh /= BigFloat(2.0);
    }
    const double deriv = ((BigFloat(4.0) * d1[1] - d1[0]) / BigFloat(3.0)).to_double();
    lhs = (alpha0 - alpha) * deriv -
          detail::log_det_wide(n, BigFloat(alpha0)).to_double() +
          detail::log_det_wide(n, BigFloat(alpha)).to_double();
  }

  // right side: -n^2 int_a^{a0} dtheta int_theta^{a0} Delta(phi)/sin^2(phi) dphi
  const auto base = gauss_legendre<double>(grid);
  const auto outer = mapped(base, alpha, alpha0);
  double total = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double theta = outer.nodes[i];
    const auto inner = mapped(base, theta, alpha0);
    double acc = 0.0;
    for (int j = 0; j < grid; ++j) {
      const double phi = inner.nodes[j];
      const double sp = std::sin(phi);
      acc += inner.weights[j] * delta_from_determinant(n, phi) / (sp * sp);
    }
    total += outer.weights[i] * acc;
  }
  const double rhs = -static_cast<double>(n) * n * total;
  return std::abs(lhs - rhs);
}

}  // namespace rmtgap
