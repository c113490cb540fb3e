// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <stdexcept>

#include "rmtgap/precision.hpp"

namespace rmtgap {

// Parameters of det(I - gamma K) for the sine kernel on L^2(0, 2s).
struct GapSpec {
  double s;
  double gamma = 1.0;

  GapSpec(double s, double gamma = 1.0) : s(s), gamma(gamma) {
    if (!(s > 0.0)) throw std::invalid_argument("GapSpec: s must be positive");
    if (!(gamma > 0.0) || gamma > 1.0)
      throw std::invalid_argument("GapSpec: gamma must lie in (0, 1]");
  }
};

struct NystromConfig {
  int m = 0;  // 0 selects the default max(40, ceil(8s) + 20)

  static int default_order(double s) {
    return std::max(40, static_cast<int>(std::ceil(8.0 * s)) + 20);
  }
  int order(double s) const {
    if (m != 0 && m < 4) throw std::invalid_argument("NystromConfig: m must be >= 4");
    return m == 0 ? default_order(s) : m;
  }
};

// sin(x-y)/(pi(x-y)) with the analytic diagonal.
double kernel(double x, double y);

// ln det(I - gamma K_s) via the symmetrized Nystrom discretization
// I - gamma sqrt(w_i) K(x_i,x_j) sqrt(w_j) and pivoted LU with sign tracking.
double log_det_gap(const GapSpec& spec, const NystromConfig& cfg = {});

// Difference between log_det_gap and -int_0^gamma tr((I - eta K)^{-1} K) deta
// evaluated on the same discretization (Gauss-Legendre in eta).
double trace_identity_residual(const GapSpec& spec, const NystromConfig& cfg, int steps);

// ln D_n(2s/n) - ln P_s: the universality bridge.
double scaling_limit_gap(double s, int n, const PrecisionConfig& prec);

}  // namespace rmtgap
