// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace rmtgap {

// Selects the arithmetic backend: decimal_digits == 15 runs on native
// doubles, anything larger on MPFR floats of that width.
struct PrecisionConfig {
  int decimal_digits = 15;
  double epsilon = std::numeric_limits<double>::epsilon();

  static PrecisionConfig native() { return PrecisionConfig{}; }

  static PrecisionConfig digits(int d) {
    if (d < 15) throw std::invalid_argument("PrecisionConfig: decimal_digits must be >= 15");
    PrecisionConfig p;
    p.decimal_digits = d;
    p.epsilon = (d == 15) ? std::numeric_limits<double>::epsilon()
                          : std::pow(10.0, 1 - d);
    return p;
  }

  bool is_native() const { return decimal_digits == 15; }
  int mantissa_bits() const {
    return static_cast<int>(std::ceil(decimal_digits * 3.3219280948873626)) + 16;
  }
};

}  // namespace rmtgap
