// SPDX-License-Identifier: Apache-2.0
#include "rmtgap/fredholm.hpp"

#include <Eigen/Dense>

#include "rmtgap/errors.hpp"
#include "rmtgap/quadrature.hpp"
#include "rmtgap/toeplitz.hpp"

namespace rmtgap {

double kernel(double x, double y) {
  const double d = x - y;
  if (std::abs(d) < 1e-6) {
    const double d2 = d * d;
    return (1.0 - d2 / 6.0 + d2 * d2 / 120.0) / M_PI;
  }
  return std::sin(d) / (M_PI * d);
}

namespace {

Eigen::MatrixXd nystrom_matrix(const GapSpec& spec, int m) {
  const auto rule = mapped(gauss_legendre<double>(m), 0.0, 2.0 * spec.s);
  Eigen::VectorXd sw = rule.weights.array().sqrt();
  Eigen::MatrixXd K(m, m);
  for (int i = 0; i < m; ++i) {
    K(i, i) = spec.gamma * rule.weights[i] / M_PI;
    for (int j = 0; j < i; ++j) {
      const double v = spec.gamma * sw[i] * sw[j] * kernel(rule.nodes[i], rule.nodes[j]);
      K(i, j) = v;
      K(j, i) = v;
    }
  }
  return K;
}

}  // namespace

double log_det_gap(const GapSpec& spec, const NystromConfig& cfg) {
  const int m = cfg.order(spec.s);
  Eigen::MatrixXd A = -nystrom_matrix(spec, m);
  A.diagonal().array() += 1.0;

  Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
  double sign = lu.permutationP().determinant();
  double log_abs = 0.0;
  for (int i = 0; i < m; ++i) {
    const double u = lu.matrixLU()(i, i);
    if (u < 0) sign = -sign;
    if (u == 0.0) sign = 0.0;
    log_abs += std::log(std::abs(u));
  }
  if (sign <= 0.0)
    throw SignFlip("log_det_gap: non-positive determinant, raise the quadrature order");
  return log_abs;
}

double trace_identity_residual(const GapSpec& spec, const NystromConfig& cfg, int steps) {
  if (!(spec.gamma < 1.0))
    throw std::invalid_argument("trace_identity_residual: requires gamma < 1");
  if (steps < 1) throw std::invalid_argument("trace_identity_residual: steps must be >= 1");
  const int m = cfg.order(spec.s);
  const GapSpec unit(spec.s, 1.0);
  const Eigen::MatrixXd K = nystrom_matrix(unit, m);
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(m, m);

  const auto rule = mapped(gauss_legendre<double>(steps), 0.0, spec.gamma);
  double integral = 0.0;
  for (int q = 0; q < steps; ++q) {
    const double eta = rule.nodes[q];
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(I - eta * K);
    integral += rule.weights[q] * lu.solve(K).trace();
  }
  return log_det_gap(spec, cfg) - (-integral);
}

double scaling_limit_gap(double s, int n, const PrecisionConfig& prec) {
  const double alpha = 2.0 * s / n;
  if (!(alpha < M_PI)) throw std::invalid_argument("scaling_limit_gap: requires 2s/n < pi");
  const double lhs = log_det(ArcEnsemble(n, alpha), prec).log_det;
  return lhs - log_det_gap(GapSpec(s));
}

}  // namespace rmtgap
