// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <stdexcept>

#include "rmtgap/errors.hpp"
#include "rmtgap/rh_model.hpp"

namespace rmtgap {

namespace {

constexpr double kEulerGamma = 0.5772156649015328606;
constexpr double kCrossover = 13.0;      // optimal-truncation floor ~ e^{-2|z|}
constexpr double kBandLo = 12.0, kBandHi = 14.0;

struct BesselSeries {
  Complex j0, y0, j1, y1;
};

// Ascending series for J0, Y0, J1, Y1; principal branch of ln(z/2).
BesselSeries series_eval(Complex z) {
  const Complex q = z * z / 4.0;  // (z/2)^2
  const Complex lg = std::log(z / 2.0);

  Complex term(1.0, 0.0), j0 = term, y0s(0.0, 0.0);
  double hk = 0.0;
  for (int k = 1; k < 80; ++k) {
    term *= -q / (static_cast<double>(k) * k);
    hk += 1.0 / k;
    j0 += term;
    y0s += -hk * term;  // (-1)^{k+1} H_k q^k/(k!)^2
    if (std::abs(term) < 1e-25 * (std::abs(j0) + 1.0)) break;
  }
  const Complex y0 = (2.0 / M_PI) * ((lg + kEulerGamma) * j0 + y0s);

  // J1 = (z/2) sum (-q)^k/(k!(k+1)!);  psi-sum for Y1
  Complex t1(1.0, 0.0), s1 = t1, psum(0.0, 0.0);
  double psi = -2.0 * kEulerGamma + 1.0;  // psi(1)+psi(2)
  psum = psi * t1;
  for (int k = 1; k < 80; ++k) {
    t1 *= -q / (static_cast<double>(k) * (k + 1.0));
    psi += 1.0 / k + 1.0 / (k + 1.0);
    s1 += t1;
    psum += psi * t1;
    if (std::abs(t1) < 1e-25 * (std::abs(s1) + 1.0)) break;
  }
  const Complex j1 = (z / 2.0) * s1;
  const Complex y1 = (2.0 / M_PI) * lg * j1 - 2.0 / (M_PI * z) - (z / (2.0 * M_PI)) * psum;
  return {j0, y0, j1, y1};
}

Complex h0_series(int kind, Complex z) {
  const BesselSeries b = series_eval(z);
  return kind == 1 ? b.j0 + Complex(0, 1) * b.y0 : b.j0 - Complex(0, 1) * b.y0;
}

Complex h0p_series(int kind, Complex z) {
  const BesselSeries b = series_eval(z);
  const Complex h1 = kind == 1 ? b.j1 + Complex(0, 1) * b.y1 : b.j1 - Complex(0, 1) * b.y1;
  return -h1;
}

// Large-argument expansion, order nu = 0 or 1; valid in
// -3pi/4 <= arg z <= 3pi/4 to ~e^{-2|z|} at optimal truncation.
Complex h0_asymptotic(int kind, int nu, Complex z) {
  const Complex i(0.0, 1.0);
  const Complex sig = (kind == 1) ? i : -i;
  Complex term(1.0, 0.0), sum = term;
  double prev = 1e300;
  const int kmax = static_cast<int>(2.0 * std::abs(z));
  for (int k = 1; k <= kmax; ++k) {
    const double num = (nu == 0) ? -(2.0 * k - 1.0) * (2.0 * k - 1.0)
                                 : 4.0 - (2.0 * k - 1.0) * (2.0 * k - 1.0);
    term *= sig * Complex(num / (8.0 * k), 0.0) / z;
    const double mag = std::abs(term);
    if (mag > prev) break;  // past optimal truncation
    sum += term;
    prev = mag;
    if (mag < 1e-18 * std::abs(sum)) break;
  }
  const double phase_shift = (nu == 0) ? M_PI / 4.0 : 3.0 * M_PI / 4.0;
  const Complex expo = std::exp(sig * (z - phase_shift));
  return std::sqrt(2.0 / (M_PI * z)) * expo * sum;
}

Complex dispatch(int kind, Complex z, bool deriv) {
  if (kind != 1 && kind != 2) throw std::invalid_argument("hankel_h0: kind must be 1 or 2");
  if (z == Complex(0.0, 0.0)) throw std::invalid_argument("hankel_h0: z must be nonzero");
  const double az = std::abs(z);
  auto series = [&] { return deriv ? h0p_series(kind, z) : h0_series(kind, z); };
  auto asym = [&] { return deriv ? -h0_asymptotic(kind, 1, z) : h0_asymptotic(kind, 0, z); };
  if (az <= kBandLo) return series();
  if (az >= kBandHi) return asym();
  const Complex a = series(), b = asym();
  if (std::abs(a - b) > 1e-9 * (std::abs(a) + 1e-30))
    throw NumericalFault("hankel_h0: crossover consistency check failed");
  return az <= kCrossover ? a : b;
}

}  // namespace

Complex hankel_h0(int kind, Complex z) { return dispatch(kind, z, false); }

Complex hankel_h0_derivative(int kind, Complex z) { return dispatch(kind, z, true); }

}  // namespace rmtgap
