// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <cmath>
#include <stdexcept>

#include "rmtgap/big_float.hpp"
#include "rmtgap/precision.hpp"

namespace rmtgap {

template <typename Scalar>
struct QuadratureRule {
  int order = 0;
  Eigen::Vector<Scalar, Eigen::Dynamic> nodes;    // strictly increasing in (-1,1)
  Eigen::Vector<Scalar, Eigen::Dynamic> weights;  // positive, sum = 2
};

namespace detail {

template <typename Scalar>
Scalar scalar_epsilon() {
  return std::numeric_limits<Scalar>::epsilon();
}
template <>
inline BigFloat scalar_epsilon<BigFloat>() {
  return BigFloat::eps();
}

// Value and derivative of the degree-m Legendre polynomial by the
// three-term recurrence.
template <typename Scalar>
void legendre_pair(int m, const Scalar& x, Scalar& p, Scalar& dp) {
  Scalar p0(1.0), p1 = x;
  for (int k = 2; k <= m; ++k) {
    Scalar pk = (Scalar(2 * k - 1) * x * p1 - Scalar(k - 1) * p0) / Scalar(k);
    p0 = p1;
    p1 = pk;
  }
  p = (m == 0) ? Scalar(1.0) : p1;
  dp = Scalar(m) * (x * p1 - p0) / (x * x - Scalar(1.0));
}

}  // namespace detail

// Gauss-Legendre rule on (-1,1): nodes are the roots of P_m found by Newton
// iteration from Chebyshev initial guesses.  Non-convergence within the
// iteration cap signals a precision misconfiguration and throws.
template <typename Scalar>
QuadratureRule<Scalar> gauss_legendre(int m) {
  using std::abs;
  if (m < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
  QuadratureRule<Scalar> rule;
  rule.order = m;
  rule.nodes.resize(m);
  rule.weights.resize(m);

  const Scalar eps = detail::scalar_epsilon<Scalar>();
  const Scalar tol = Scalar(10.0) * eps;
  const int newton_cap = 100;

  const int half = (m + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev guess for the i-th root (descending), then Newton.
    Scalar x(std::cos(M_PI * (i + 0.75) / (m + 0.5)));
    Scalar p, dp;
    bool converged = false;
    for (int it = 0; it < newton_cap; ++it) {
      detail::legendre_pair(m, x, p, dp);
      Scalar step = p / dp;
      x -= step;
      if (abs(step) < tol) {
        converged = true;
        break;
      }
    }
    if (!converged) throw std::runtime_error("gauss_legendre: Newton iteration did not converge");
    detail::legendre_pair(m, x, p, dp);
    Scalar w = Scalar(2.0) / ((Scalar(1.0) - x * x) * dp * dp);
    rule.nodes[m - 1 - i] = x;
    rule.nodes[i] = -x;
    rule.weights[i] = w;
    rule.weights[m - 1 - i] = w;
  }
  if (m % 2 == 1) rule.nodes[m / 2] = Scalar(0.0);
  return rule;
}

inline QuadratureRule<double> gauss_legendre(int m, const PrecisionConfig& prec) {
  if (prec.is_native()) return gauss_legendre<double>(m);
  ScopedPrecision guard(prec.mantissa_bits());
  QuadratureRule<BigFloat> wide = gauss_legendre<BigFloat>(m);
  QuadratureRule<double> rule;
  rule.order = m;
  rule.nodes.resize(m);
  rule.weights.resize(m);
  for (int i = 0; i < m; ++i) {
    rule.nodes[i] = wide.nodes[i].to_double();
    rule.weights[i] = wide.weights[i].to_double();
  }
  return rule;
}

// Maps a rule on (-1,1) to (a,b).
template <typename Scalar>
QuadratureRule<Scalar> mapped(const QuadratureRule<Scalar>& rule, const Scalar& a, const Scalar& b) {
  QuadratureRule<Scalar> out;
  out.order = rule.order;
  const Scalar mid = (a + b) / Scalar(2.0);
  const Scalar rad = (b - a) / Scalar(2.0);
  out.nodes = (rule.nodes.array() * rad + mid).matrix();
  out.weights = rule.weights * rad;
  return out;
}

}  // namespace rmtgap
