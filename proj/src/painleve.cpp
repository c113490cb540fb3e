// SPDX-License-Identifier: Apache-2.0
#include "rmtgap/painleve.hpp"

#include <cmath>
#include <stdexcept>

#include "rmtgap/big_float.hpp"
#include "rmtgap/toeplitz.hpp"

namespace rmtgap {

namespace {

struct Stencil {
  Complex t, eta, etap, etapp;
};

// 5-point central differences of ln D_n in alpha (4th order for L', L'',
// 2nd order for L'''), carried in extended precision, then chain rule to t.
Stencil eta_stencil(int n, double alpha, double h) {
  if (!(alpha - 2 * h > 0.0) || !(alpha + 2 * h < M_PI))
    throw std::invalid_argument("eta_from_determinant: stencil leaves (0, pi)");
  const int digits = std::max(30, recommended_digits(n, alpha + 2 * h) + 12);
  ScopedPrecision guard(PrecisionConfig::digits(digits).mantissa_bits());

  const BigFloat a0(alpha), hh(h);
  BigFloat f[5];  // f[k+2] = ln D_n(alpha + k h)
  for (int k = -2; k <= 2; ++k) f[k + 2] = detail::log_det_wide(n, a0 + BigFloat(k) * hh);

  const double L1 =
      ((f[0] - f[4]) + BigFloat(8.0) * (f[3] - f[1])).to_double() / (12.0 * h);
  const double L2 =
      (BigFloat(16.0) * (f[1] + f[3]) - (f[0] + f[4]) - BigFloat(30.0) * f[2]).to_double() /
      (12.0 * h * h);
  const double L3 = ((f[4] - f[0]) + BigFloat(2.0) * (f[1] - f[3])).to_double() / (2.0 * h * h * h);

  const Complex i(0.0, 1.0);
  const Complex t = std::exp(-2.0 * i * alpha);
  Stencil out;
  out.t = t;
  out.eta = (t - 1.0) * (i / 2.0) * L1;
  out.etap = (i / 2.0) * L1 - (t - 1.0) / (4.0 * t) * L2;
  out.etapp = -L2 / (4.0 * t) - L2 / (4.0 * t * t) - i * (t - 1.0) / (8.0 * t * t) * L3;
  return out;
}

}  // namespace

EtaValue eta_from_determinant(int n, double alpha, double h) {
  const Stencil coarse = eta_stencil(n, alpha, h);
  const Stencil fine = eta_stencil(n, alpha, h / 2);
  EtaValue out;
  out.t = fine.t;
  out.eta = fine.eta;
  out.d_eta_dt = fine.etap;
  out.d2_eta_dt2 = fine.etapp;
  out.fd_tolerance = std::max({std::abs(coarse.eta - fine.eta),
                               std::abs(coarse.etap - fine.etap),
                               std::abs(coarse.etapp - fine.etapp)});
  return out;
}

Complex eta0_term(double alpha) {
  const Complex sq = std::exp(Complex(0.0, -alpha));
  return (1.0 - sq) * (1.0 - sq) / 4.0;
}

Complex eta2_term(double alpha) {
  const Complex sq = std::exp(Complex(0.0, -alpha));
  return -(1.0 + sq) * (1.0 + sq) / 16.0;
}

Complex eta_expansion(int n, double alpha) {
  return static_cast<double>(n) * n * eta0_term(alpha) + eta2_term(alpha);
}

double sigma_pvi_residual(int n, double alpha, double h) {
  const Stencil st = eta_stencil(n, alpha, h);
  const double n2 = static_cast<double>(n) * n;
  const Complex& t = st.t;
  const Complex lhs =
      (st.etap - n2 / 4.0) * (t * (t - 1.0) * st.etapp) * (t * (t - 1.0) * st.etapp) +
      [&] {
        const Complex bracket =
            2.0 * (st.etap - n2 / 4.0) * (t * st.etap - st.eta) - st.etap * st.etap +
            (n2 / 2.0) * st.etap;
        return bracket * bracket;
      }();
  const Complex rhs = st.etap * st.etap * st.etap * st.etap;
  const double scale = 1.0 + std::pow(std::abs(st.etap), 4);
  return std::abs(lhs - rhs) / scale;
}

}  // namespace rmtgap
