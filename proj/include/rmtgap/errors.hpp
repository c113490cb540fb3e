// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace rmtgap {

// Numerical faults: the computation is well-posed but the requested
// precision (or discretization) cannot support it.  The CLI maps these
// to exit code 3; domain errors (std::invalid_argument) map to 2.
class NumericalFault : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Cholesky pivot came out <= 0: matrix numerically not positive definite
// at the working precision.  Raise precision or shrink n.
class NonPositivePivot : public NumericalFault {
 public:
  NonPositivePivot(int index, double value)
      : NumericalFault("non-positive Cholesky pivot " + std::to_string(value) +
                       " at index " + std::to_string(index)),
        index(index),
        value(value) {}
  int index;
  double value;
};

// Discretized Fredholm determinant turned negative: quadrature order too
// small for the requested interval length.
class SignFlip : public NumericalFault {
 public:
  using NumericalFault::NumericalFault;
};

// Evaluation requested exactly at a pole of a conformal map or model function.
class PoleInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace rmtgap
