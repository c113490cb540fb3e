// SPDX-License-Identifier: Apache-2.0
#include "rmtgap/rh_model.hpp"

#include <cmath>
#include <stdexcept>

#include "rmtgap/big_float.hpp"
#include "rmtgap/errors.hpp"
#include "rmtgap/toeplitz.hpp"

namespace rmtgap {

namespace {

const Complex kI(0.0, 1.0);

void require_alpha_open(double alpha) {
  if (!(alpha > 0.0) || !(alpha < M_PI))
    throw std::invalid_argument("alpha must lie in (0, pi)");
}

}  // namespace

Complex map_z_lambda(Complex z, double alpha) {
  require_alpha_open(alpha);
  if (std::abs(z + 1.0) < 1e-300) throw PoleInput("map_z_lambda: pole at z = -1");
  return -kI * (1.0 / std::tan(alpha / 2)) * (z - 1.0) / (z + 1.0);
}

Complex map_lambda_z(Complex lambda, double alpha) {
  require_alpha_open(alpha);
  const double t = std::tan(alpha / 2);
  const Complex den = 1.0 - kI * lambda * t;
  if (std::abs(den) < 1e-14 * (1.0 + std::abs(lambda) * t))
    throw PoleInput("map_lambda_z: pole at lambda = -i cot(alpha/2)");
  return (1.0 + kI * lambda * t) / den;
}

Complex sqrt_lambda2_minus_1(Complex lambda, double, BoundarySide side) {
  switch (side) {
    case BoundarySide::plus:
      return kI * std::sqrt(1.0 - lambda.real() * lambda.real());
    case BoundarySide::minus:
      return -kI * std::sqrt(1.0 - lambda.real() * lambda.real());
    case BoundarySide::off_cut:
      break;
  }
  // principal roots of the factors: cut exactly on [-1,1], ~ lambda at infinity
  return std::sqrt(lambda - 1.0) * std::sqrt(lambda + 1.0);
}

Complex g_eval(Complex lambda, double alpha, BoundarySide side) {
  require_alpha_open(alpha);
  const double s = std::sin(alpha / 2);
  const double t = std::tan(alpha / 2);
  const Complex pole_up = kI / t;  // z = 0; removable 0/0 with value kappa
  if (side == BoundarySide::off_cut && std::abs(lambda - pole_up) < 1e-10 * (1.0 + std::abs(pole_up))) {
    const double c = std::cos(alpha / 2);
    return Complex(c * c, 0.0);
  }
  const Complex sq = sqrt_lambda2_minus_1(lambda, alpha, side);
  return (1.0 + kI * sq * s) / (1.0 + kI * lambda * t);
}

Complex f_eval(Complex lambda, double alpha, BoundarySide side) {
  require_alpha_open(alpha);
  const double s = std::sin(alpha / 2);
  if (side != BoundarySide::off_cut) {
    const double x = lambda.real();
    const double r = std::sqrt(1.0 - x * x) * s;
    const Complex fp((1.0 - r) / (1.0 + r), 0.0);
    return side == BoundarySide::plus ? fp : 1.0 / fp;
  }
  const Complex sq = sqrt_lambda2_minus_1(lambda, alpha, side);
  const Complex den = 1.0 - kI * sq * s;
  if (std::abs(den) < 1e-12 * (1.0 + std::abs(sq) * s))
    throw PoleInput("f_eval: pole at lambda = -i cot(alpha/2)");
  return (1.0 + kI * sq * s) / den;
}

Complex beta_eval(Complex lambda, BoundarySide side) {
  if (side != BoundarySide::off_cut) {
    const double x = lambda.real();
    const double mag = std::pow((1.0 - x) / (1.0 + x), 0.25);
    const Complex phase = std::polar(1.0, side == BoundarySide::plus ? M_PI / 4 : -M_PI / 4);
    return mag * phase;
  }
  return std::pow((lambda - 1.0) / (lambda + 1.0), 0.25);
}

Mat2C model_solution(Complex lambda, BoundarySide side) {
  const Complex b = beta_eval(lambda, side);
  const Complex p = (b + 1.0 / b) / 2.0;
  const Complex q = (b - 1.0 / b) / (2.0 * kI);
  return mat2(p, q, -q, p);
}

Mat2C correction(int j, Complex lambda, int n, double alpha) {
  require_alpha_open(alpha);
  if (n < 1) throw std::invalid_argument("correction: n must be >= 1");
  if (std::abs(lambda - 1.0) < 1e-300 || std::abs(lambda + 1.0) < 1e-300)
    throw PoleInput("correction: pole at lambda = +-1");
  const double rho = n * std::sin(alpha / 2);
  const Complex a = 1.0 / (1.0 - lambda);
  const Complex b = 1.0 / (1.0 + lambda);
  if (j == 1) {
    const Complex pre = 1.0 / (16.0 * kI * rho);
    return pre * (a * mat2(-1.0, kI, kI, 1.0) + b * mat2(1.0, kI, kI, -1.0));
  }
  if (j == 2) {
    const Complex pre = 1.0 / (256.0 * rho * rho);
    return pre * (a * mat2(1.0, 8.0 * kI, -8.0 * kI, 1.0) + b * mat2(1.0, -8.0 * kI, 8.0 * kI, 1.0));
  }
  throw std::invalid_argument("correction: j must be 1 or 2");
}

Complex omega_eval(Complex lambda, double alpha) {
  return 0.5 * std::log(f_eval(lambda, alpha));
}

Complex omega_sq_series(Complex u, double alpha) {
  const double s2 = std::sin(alpha / 2) * std::sin(alpha / 2);
  return 2.0 * u * (-1.0) * s2 * (1.0 + u / 2.0 - (4.0 / 3.0) * u * s2);
}

Mat2C parametrix_lambda1(Complex lambda, int n, double alpha) {
  const Complex om = omega_eval(lambda, alpha);
  const Complex sqrt_zeta = -kI * static_cast<double>(n) * om;
  const Complex b = beta_eval(lambda);
  const Complex b2 = b * b;
  const Complex d = 3.0 * b2 - 1.0 / b2;
  const Complex sgm = kI * (3.0 * b2 + 1.0 / b2);
  return (kI / (16.0 * sqrt_zeta)) * mat2(d, sgm, sgm, -d);
}

Mat2C parametrix_lambda2(Complex lambda, int n, double alpha) {
  const Complex om = omega_eval(lambda, alpha);
  const Complex sqrt_zeta = -kI * static_cast<double>(n) * om;
  const Complex zeta = sqrt_zeta * sqrt_zeta;
  return (3.0 / (128.0 * zeta)) * mat2(1.0, -4.0 * kI, 4.0 * kI, 1.0);
}

Mat2C parametrix_mismatch(double theta, int n, double alpha, double delta) {
  require_alpha_open(alpha);
  if (!(delta > 0.0) || delta >= 0.5)
    throw std::invalid_argument("parametrix_mismatch: delta must lie in (0, 0.5)");
  const Complex lambda = 1.0 + delta * std::polar(1.0, theta);

  const Complex om = omega_eval(lambda, alpha);
  const Complex sqrt_zeta = -kI * static_cast<double>(n) * om;
  if (std::abs(std::arg(sqrt_zeta)) > 3.0 * M_PI / 4.0 + 1e-12)
    throw NumericalFault("parametrix_mismatch: sqrt(zeta) left the Hankel sector");
  const Complex zeta4 = std::sqrt(sqrt_zeta);  // (zeta^{1/4})^2 = sqrt(zeta) exactly

  const Mat2C N = model_solution(lambda);
  const Complex e4 = std::polar(1.0, M_PI / 4);
  const Mat2C pre = mat2(e4, 0.0, 0.0, std::conj(e4)) *
                    (0.5 * std::sqrt(M_PI / 2.0) * mat2(1.0, -kI, 1.0, kI)) *
                    mat2(zeta4, 0.0, 0.0, 1.0 / zeta4);

  const Complex h1 = hankel_h0(1, sqrt_zeta);
  const Complex h2 = hankel_h0(2, sqrt_zeta);
  const Complex h1p = sqrt_zeta * hankel_h0_derivative(1, sqrt_zeta);
  const Complex h2p = sqrt_zeta * hankel_h0_derivative(2, sqrt_zeta);
  const Mat2C hat = mat2(h1, h2, h1p, h2p);

  const Complex fm = std::exp(-static_cast<double>(n) * om);  // f^{-n/2}
  const Mat2C fpow = mat2(fm, 0.0, 0.0, 1.0 / fm);

  const Mat2C P = N * pre * hat * fpow;
  const Mat2C Ninv = mat2(N(1, 1), -N(0, 1), -N(1, 0), N(0, 0));  // det N = 1

  const Mat2C expansion = Mat2C::Identity() + parametrix_lambda1(lambda, n, alpha) +
                          parametrix_lambda2(lambda, n, alpha);
  return P * Ninv - expansion;
}

double delta_asymptotic(int n, double alpha) {
  if (n < 1) throw std::invalid_argument("delta_asymptotic: n must be >= 1");
  if (!(alpha > 0.0) || alpha > M_PI)
    throw std::invalid_argument("delta_asymptotic: alpha must lie in (0, pi]");
  const double s = std::sin(alpha / 2);
  const double c = std::cos(alpha / 2);
  return s * s - c * c / (4.0 * static_cast<double>(n) * n);
}

double delta_from_determinant(int n, double alpha, double h) {
  if (!(alpha - 2 * h > 0.0) || !(alpha + 2 * h < M_PI))
    throw std::invalid_argument("delta_from_determinant: stencil leaves (0, pi)");
  const int digits = std::max(30, recommended_digits(n, alpha + 2 * h) + 12);
  ScopedPrecision guard(PrecisionConfig::digits(digits).mantissa_bits());

  auto f = [&](const BigFloat& a) { return detail::log_det_wide(n, a); };
  const BigFloat a0(alpha);
  const BigFloat f0 = f(a0);
  BigFloat d2[3];
  BigFloat hh(h);
  for (int lev = 0; lev < 3; ++lev) {
    d2[lev] = (f(a0 + hh) - BigFloat(2.0) * f0 + f(a0 - hh)) / (hh * hh);
    hh /= BigFloat(2.0);
  }
  const BigFloat r1 = (BigFloat(4.0) * d2[1] - d2[0]) / BigFloat(3.0);
  const BigFloat r2 = (BigFloat(4.0) * d2[2] - d2[1]) / BigFloat(3.0);
  const BigFloat rr = (BigFloat(16.0) * r2 - r1) / BigFloat(15.0);

  const double sa = std::sin(alpha);
  return -(sa * sa) / (static_cast<double>(n) * n) * rr.to_double();
}

double theta_from_determinant(int n, double alpha) {
  require_alpha_open(alpha);
  const double pivot = ratio_next(ArcEnsemble(n, alpha));
  return std::exp(std::log(pivot) - 2.0 * n * std::log(std::cos(alpha / 2)));
}

}  // namespace rmtgap
