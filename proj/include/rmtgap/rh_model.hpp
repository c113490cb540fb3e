// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>

#include "rmtgap/mat2.hpp"
#include "rmtgap/precision.hpp"

namespace rmtgap {

// Boundary-value convention on the cut [-1,1]: `plus` approaches from the
// upper half plane, `minus` from the lower.  Off-cut evaluation needs no tag.
enum class BoundarySide { plus, minus, off_cut };

// Linear-fractional map between the arc problem (z-plane) and the interval
// problem (lambda-plane): lambda = -i cot(alpha/2) (z-1)/(z+1).
Complex map_z_lambda(Complex z, double alpha);
Complex map_lambda_z(Complex lambda, double alpha);

// sqrt(lambda^2 - 1), cut on [-1,1], ~ lambda at infinity.
Complex sqrt_lambda2_minus_1(Complex lambda, double alpha_unused, BoundarySide side);

// g(lambda) = (1 + i sqrt(lambda^2-1) sin(a/2)) / (1 + i lambda tan(a/2)).
// Removable 0/0 at lambda = i cot(a/2) evaluates to kappa = cos^2(a/2).
Complex g_eval(Complex lambda, double alpha, BoundarySide side = BoundarySide::off_cut);

// f(lambda) = (1 + i sqrt(lambda^2-1) sin(a/2)) / (1 - i sqrt(lambda^2-1) sin(a/2));
// on the cut f_+ = (1 - sqrt(1-x^2) sin(a/2))/(1 + sqrt(1-x^2) sin(a/2)), f_- = 1/f_+.
// Genuine pole at lambda = -i cot(a/2).
Complex f_eval(Complex lambda, double alpha, BoundarySide side = BoundarySide::off_cut);

// beta(lambda) = ((lambda-1)/(lambda+1))^{1/4} with beta(infinity) = 1.
Complex beta_eval(Complex lambda, BoundarySide side = BoundarySide::off_cut);

// Outer model solution N(lambda); det N = 1, N(infinity) = I.
Mat2C model_solution(Complex lambda, BoundarySide side = BoundarySide::off_cut);

// Correction terms R_1, R_2 of the rho-expansion, valid outside the
// endpoint disks; rho = n sin(alpha/2).
Mat2C correction(int j, Complex lambda, int n, double alpha);

// Hankel functions H_0^{(1,2)}: ascending series for |z| <= 13, the
// large-argument expansion beyond, dual-checked on the band |z| in [12,14].
Complex hankel_h0(int kind, Complex z);
Complex hankel_h0_derivative(int kind, Complex z);

// omega = (1/2) ln f, principal branch (valid on the endpoint disk boundary).
Complex omega_eval(Complex lambda, double alpha);

// Leading series of omega^2 at lambda = 1+u:
// 2u e^{i pi} sin^2(a/2) (1 + u/2 - (4/3) u sin^2(a/2)).
Complex omega_sq_series(Complex u, double alpha);

// P(lambda) N(lambda)^{-1} - (I + Lambda_1 + Lambda_2) on the boundary of the
// right endpoint disk, lambda = 1 + delta e^{i theta}.  O(rho^{-3}) when the
// Hankel asymptotic regime applies.
Mat2C parametrix_mismatch(double theta, int n, double alpha, double delta);

// Jump-expansion terms on the right disk boundary (exposed for tests).
Mat2C parametrix_lambda1(Complex lambda, int n, double alpha);
Mat2C parametrix_lambda2(Complex lambda, int n, double alpha);

// sin^2(a/2) - cos^2(a/2)/(4 n^2)
double delta_asymptotic(int n, double alpha);

// Delta = -(sin^2 a / n^2) d^2/da^2 ln D_n(a), Richardson central differences
// on the extended-precision determinant.
double delta_from_determinant(int n, double alpha, double h);
inline double delta_from_determinant(int n, double alpha) {
  return delta_from_determinant(n, alpha, 1e-4);
}

// Theta = (D_{n+1}/D_n) / cos^{2n}(a/2)
double theta_from_determinant(int n, double alpha);

}  // namespace rmtgap
