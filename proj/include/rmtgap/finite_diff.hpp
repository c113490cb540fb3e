// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace rmtgap {

struct DerivativeResult {
  double value = 0.0;
  double error_estimate = 0.0;  // magnitude of the last extrapolation increment
};

// Central-difference derivative of order 1 or 2, Richardson-extrapolated
// over `levels` halvings of h.  Error orders eliminated are h^2, h^4, ...
template <typename F>
DerivativeResult derivative(F&& f, double x, int order, double h, int levels = 2) {
  if (h <= 0) throw std::invalid_argument("derivative: h must be positive");
  if (order != 1 && order != 2) throw std::invalid_argument("derivative: order must be 1 or 2");
  if (levels < 0 || levels > 8) throw std::invalid_argument("derivative: levels out of range");
  const double eps = 2.220446049250313e-16;
  if (h < 100.0 * eps * std::abs(x))
    throw std::invalid_argument("derivative: step underflows at this x");

  std::vector<double> row(levels + 1);
  for (int lev = 0; lev <= levels; ++lev) {
    const double hh = h / static_cast<double>(1 << lev);
    row[lev] = (order == 1) ? (f(x + hh) - f(x - hh)) / (2.0 * hh)
                            : (f(x + hh) - 2.0 * f(x) + f(x - hh)) / (hh * hh);
  }
  double increment = 0.0;
  double pow4 = 4.0;
  for (int k = 1; k <= levels; ++k) {
    for (int lev = levels; lev >= k; --lev) {
      const double refined = (pow4 * row[lev] - row[lev - 1]) / (pow4 - 1.0);
      if (lev == levels) increment = refined - row[lev];
      row[lev] = refined;
    }
    pow4 *= 4.0;
  }
  return {row[levels], levels == 0 ? std::abs(row[0]) * eps : std::abs(increment)};
}

inline double default_step(double x, int order) {
  const double eps = 2.220446049250313e-16;
  const double scale = std::max(std::abs(x), 1.0);
  return scale * std::pow(eps, order == 1 ? 1.0 / 3.0 : 0.25);
}

}  // namespace rmtgap
