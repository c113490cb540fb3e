// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <complex>

namespace rmtgap {

using Complex = std::complex<double>;
using Mat2C = Eigen::Matrix2cd;  // value type of all RH model functions

inline Mat2C mat2(Complex a11, Complex a12, Complex a21, Complex a22) {
  Mat2C m;
  m << a11, a12, a21, a22;
  return m;
}

inline double mat2_norm(const Mat2C& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace rmtgap
