// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "rmtgap/big_float.hpp"
#include "rmtgap/errors.hpp"
#include "rmtgap/precision.hpp"
#include "rmtgap/rational.hpp"

namespace rmtgap {

// Coordinate of every Toeplitz / Riemann-Hilbert computation: the CUE gap
// probability D_n(alpha) excludes the arc (-alpha, alpha).
struct ArcEnsemble {
  int n;
  double alpha;  // arc half-gap, radians, in (0, pi]

  ArcEnsemble(int n, double alpha) : n(n), alpha(alpha) {
    if (n < 1) throw std::invalid_argument("ArcEnsemble: n must be >= 1");
    if (!(alpha > 0.0) || alpha > M_PI)
      throw std::invalid_argument("ArcEnsemble: alpha must lie in (0, pi]");
  }

  double beta() const { return M_PI - alpha; }
  double rho() const { return n * std::sin(alpha / 2); }
  double kappa() const { const double c = std::cos(alpha / 2); return c * c; }
  std::complex<double> t() const { return std::exp(std::complex<double>(0.0, -2.0 * alpha)); }
};

struct LogDetResult {
  double log_det = 0.0;
  std::vector<double> pivots;  // d_k = D_{k+1}/D_k from the LDL^T factorization
  double min_pivot = 0.0;
  bool precision_ok = false;
};

// Fourier coefficients of the arc indicator symbol:
// M_0 = 1 - alpha/pi, M_k = -sin(k alpha)/(pi k), M_{-k} = M_k.
double symbol_entry(int k, double alpha);

// Decimal digits needed so the LDL^T pivot trail at (n, alpha) stays above
// the roundoff cascade; 15 means the native double backend suffices.
int recommended_digits(int n, double alpha);

LogDetResult log_det(const ArcEnsemble& ens, const PrecisionConfig& prec);
inline LogDetResult log_det(const ArcEnsemble& ens) {
  return log_det(ens, PrecisionConfig::digits(recommended_digits(ens.n, ens.alpha)));
}

// D_{n+1}/D_n: the last pivot of the (n+1)-dimensional factorization.
double ratio_next(const ArcEnsemble& ens, const PrecisionConfig& prec);
inline double ratio_next(const ArcEnsemble& ens) {
  return ratio_next(ens, PrecisionConfig::digits(recommended_digits(ens.n + 1, ens.alpha)));
}

// Direct evaluation of the n-fold arc integral for D_n (n <= 3); the
// independent cross-check of the determinant route.
double multiple_integral_oracle(int n, double alpha, int quad_order);

// Norm of the degree-k monic Legendre polynomial: 2^{2k}(k!)^4/((2k)!)^2 * 2/(2k+1).
RationalValue legendre_norm(int k);

// A_n = prod_{k=0}^{n-1} h_k, exactly.
RationalValue a_n(int n);

// ln D_n(pi - beta) with the O_n(beta^2) term dropped:
// n^2 ln(beta) - n ln(2 pi) + ln A_n.
double small_beta_logdet(int n, double beta);

// ln A_n - [c0 - (1/4) ln n + n ln(2 pi) - n^2 ln 2]
double a_n_asymptotic_residual(int n, const PrecisionConfig& prec);

namespace detail {

inline void submul(double& s, double a, double b) { s -= a * b; }
// the BigFloat overload is a friend of BigFloat, found via ADL

template <typename Scalar>
Scalar scalar_pi() {
  return Scalar(M_PI);
}
template <>
inline BigFloat scalar_pi<BigFloat>() {
  return BigFloat::pi();
}

// Symbol entries M_0..M_{n-1} at the working precision of Scalar.  The
// argument is Scalar so finite-difference stencil points stay exact.
template <typename Scalar>
std::vector<Scalar> symbol_row(int n, const Scalar& a) {
  const Scalar pi = scalar_pi<Scalar>();
  std::vector<Scalar> row;
  row.reserve(n);
  row.push_back(Scalar(1.0) - a / pi);
  for (int k = 1; k < n; ++k) row.push_back(-sin(Scalar(k) * a) / (pi * Scalar(k)));
  return row;
}

template <typename Scalar>
struct PivotTrail {
  std::vector<double> pivots;
  Scalar log_det_wide{0.0};
  double max_entry = 0.0;
};

// In-place LDL^T on the symmetric Toeplitz matrix built from `row`.
// Pivots are exactly the determinant ratios D_{k+1}/D_k.
template <typename Scalar>
PivotTrail<Scalar> toeplitz_ldlt(int n, const std::vector<Scalar>& row) {
  using std::abs;
  using std::log;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> A(n, n);
  double max_entry = 0.0;
  for (int j = 0; j < n; ++j)
    for (int i = j; i < n; ++i) {
      A(i, j) = row[i - j];
      max_entry = std::max(max_entry, std::abs(static_cast<double>(row[i - j])));
    }

  std::vector<Scalar> d(n, Scalar(0.0));
  std::vector<Scalar> w(n, Scalar(0.0));
  Scalar log_sum(0.0);
  PivotTrail<Scalar> out;
  out.pivots.reserve(n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < j; ++k) w[k] = A(j, k) * d[k];
    Scalar s = A(j, j);
    for (int k = 0; k < j; ++k) submul(s, A(j, k), w[k]);
    d[j] = s;
    const double dj = static_cast<double>(s);
    if (!(dj > 0.0)) throw NonPositivePivot(j, dj);
    out.pivots.push_back(dj);
    log_sum += log(s);
    for (int i = j + 1; i < n; ++i) {
      Scalar t = A(i, j);
      for (int k = 0; k < j; ++k) submul(t, A(i, k), w[k]);
      A(i, j) = t / s;
    }
  }
  out.log_det_wide = log_sum;
  out.max_entry = max_entry;
  return out;
}

// ln D_n(a) carried at the current working precision; the FD stencils of the
// rh-model / painleve / asymptotics routes difference these without rounding
// to double first.
inline BigFloat log_det_wide(int n, const BigFloat& a) {
  return toeplitz_ldlt<BigFloat>(n, symbol_row<BigFloat>(n, a)).log_det_wide;
}

}  // namespace detail

}  // namespace rmtgap
