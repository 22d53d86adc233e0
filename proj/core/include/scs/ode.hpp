#ifndef SCS_ODE_HPP
#define SCS_ODE_HPP

#include <array>
#include <cmath>
#include <cstddef>

#include "scs/model.hpp"

namespace scs {

// Adaptive Dormand-Prince 5(4) integrator for small fixed-size systems.
// Throws IntegrationError on step-size underflow.
template <std::size_t N, typename Deriv>
std::array<double, N> integrate_adaptive(Deriv&& deriv, std::array<double, N> y, double t0,
                                         double t1, double rel_tol, double abs_tol = 1e-14) {
  using State = std::array<double, N>;
  if (t0 == t1) return y;

  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                          a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                          a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  // 4th-order embedded weights
  static constexpr double e1 = 5179.0 / 57600, e3 = 7571.0 / 16695, e4 = 393.0 / 640,
                          e5 = -92097.0 / 339200, e6 = 187.0 / 2100, e7 = 1.0 / 40;

  const double dir = (t1 > t0) ? 1.0 : -1.0;
  double t = t0;
  double h = dir * std::min(std::abs(t1 - t0), std::max(1e-6, std::abs(t1 - t0) / 100.0));

  State k1 = deriv(t, y);
  while (dir * (t1 - t) > 0) {
    if (dir * (t + h - t1) > 0) h = t1 - t;
    if (std::abs(h) < 1e-14 * std::max(1.0, std::abs(t)))
      throw IntegrationError("ode: step size underflow");

    State y2, y3, y4, y5, y6, y7;
    for (std::size_t i = 0; i < N; ++i) y2[i] = y[i] + h * a21 * k1[i];
    State k2 = deriv(t + c2 * h, y2);
    for (std::size_t i = 0; i < N; ++i) y3[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    State k3 = deriv(t + c3 * h, y3);
    for (std::size_t i = 0; i < N; ++i)
      y4[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    State k4 = deriv(t + c4 * h, y4);
    for (std::size_t i = 0; i < N; ++i)
      y5[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    State k5 = deriv(t + c5 * h, y5);
    for (std::size_t i = 0; i < N; ++i)
      y6[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    State k6 = deriv(t + h, y6);
    for (std::size_t i = 0; i < N; ++i)
      y7[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    State k7 = deriv(t + h, y7);

    double err = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      const double y4th =
          y[i] + h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      const double scale = abs_tol + rel_tol * std::max(std::abs(y[i]), std::abs(y7[i]));
      const double r = (y7[i] - y4th) / scale;
      err += r * r;
    }
    err = std::sqrt(err / static_cast<double>(N));

    if (err <= 1.0) {
      t += h;
      y = y7;
      k1 = k7;  // FSAL
    }
    const double factor = (err > 0) ? 0.9 * std::pow(err, -0.2) : 5.0;
    h *= std::clamp(factor, 0.2, 5.0);
  }
  return y;
}

}  // namespace scs

#endif
