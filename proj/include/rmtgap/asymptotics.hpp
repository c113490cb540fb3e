// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rmtgap/fredholm.hpp"
#include "rmtgap/precision.hpp"

namespace rmtgap {

// An asymptotic law as ordered (label, value) terms plus the claimed
// remainder order; evaluation is the plain sum of the terms.
struct Expansion {
  std::vector<std::pair<std::string, double>> terms;
  std::string remainder_order;

  double value() const {
    double s = 0.0;
    for (const auto& [label, v] : terms) s += v;
    return s;
  }
};

struct ConstantFit {
  double estimate = 0.0;
  std::vector<std::pair<double, double>> samples;  // (scale, raw residual)
  std::vector<double> extrapolants;                // one-step Richardson, consecutive pairs
  int extrapolation_order = 1;
};

// n^2 ln cos(a/2) - (1/4) ln(n sin(a/2)) + c0, remainder O(1/(n sin(a/2)))
Expansion widom_expansion(int n, double alpha, double c0);

// -s^2/2 - (1/4) ln s + c0, remainder O(1/s)
Expansion dyson_expansion(double s, double c0);

// Residuals ln D_n - n^2 ln cos(a/2) + (1/4) ln(n sin(a/2)) extrapolated to
// rho -> infinity; needs at least two pairs with rho spread >= 2x.
ConstantFit extract_c0_widom(const std::vector<std::pair<int, double>>& pairs);

// Residuals ln P_s + s^2/2 + (1/4) ln s extrapolated in 1/s.
ConstantFit extract_c0_dyson(std::vector<double> s_values, const NystromConfig& cfg = {});

// |d/da ln D_n + (n^2/2) tan(a/2) + (1/8) cot(a/2)|
double first_derivative_law_residual(int n, double alpha);

// Absolute difference between the two sides of the integrated differential
// identity over (alpha, alpha0), nested Gauss-Legendre of the given order.
double dinteg_residual(int n, double alpha, double alpha0, int grid);

}  // namespace rmtgap
