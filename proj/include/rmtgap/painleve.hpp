// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>

#include "rmtgap/mat2.hpp"

namespace rmtgap {

// tau-function data at t = exp(-2 i alpha): eta = t(t-1) d/dt ln D_n and its
// first two t-derivatives, obtained from real alpha-derivatives by the chain
// rule dt/dalpha = -2 i t.
struct EtaValue {
  Complex t;
  Complex eta;
  Complex d_eta_dt;
  Complex d2_eta_dt2;
  double fd_tolerance = 0.0;  // componentwise |stencil(h) - stencil(h/2)| bound
};

EtaValue eta_from_determinant(int n, double alpha, double h);

// n^2 eta_0 + eta_2 with eta_0 = (1-sqrt(t))^2/4, eta_2 = -(1+sqrt(t))^2/16,
// branch sqrt(t) = exp(-i alpha).
Complex eta_expansion(int n, double alpha);
Complex eta0_term(double alpha);
Complex eta2_term(double alpha);

// Normalized residual of the sigma-form of Painleve VI at
// theta_infty = -theta_0 = n, theta_1 = theta_t = 0:
// |LHS - (eta')^4| / (1 + |eta'|^4), derivatives from a 5-point stencil at h.
double sigma_pvi_residual(int n, double alpha, double h);

}  // namespace rmtgap
