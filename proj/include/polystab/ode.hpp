#pragma once

#include <algorithm>
#include <array>
#include <cmath>

namespace polystab::ode {

using State2 = std::array<double, 2>;

/// Outcome of a single embedded Runge-Kutta step.
struct StepResult {
  State2 y{};
  State2 dydx{};       ///< derivative at the end point (first stage of the next step)
  double error = 0.0;  ///< scaled RMS error; the step is acceptable when <= 1
  bool domain_ok = true;
};

/// One Dormand-Prince 5(4) step from (x, y) with step h. `dydx` is f(x, y).
///
/// `rhs` has signature bool(double x, const State2& y, State2& out) and
/// returns false when y lies outside the domain of the right-hand side; the
/// step is then abandoned with domain_ok = false.
template <class Rhs>
StepResult dormand_prince_step(Rhs&& rhs, double x, const State2& y, const State2& dydx,
                               double h, double atol, double rtol) {
  constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;
  constexpr double a21 = 1.0 / 5.0;
  constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
  constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
  constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0,
                   a54 = -212.0 / 729.0;
  constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                   a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
  constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                   b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
  // fifth minus fourth order weights
  constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                   e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;

  StepResult out;
  State2 k2{}, k3{}, k4{}, k5{}, k6{}, tmp{};
  const State2& k1 = dydx;

  auto stage = [&](double xs, State2& k) {
    if (!out.domain_ok) return;
    out.domain_ok = rhs(xs, tmp, k);
  };

  for (int i = 0; i < 2; ++i) tmp[i] = y[i] + h * a21 * k1[i];
  stage(x + c2 * h, k2);
  for (int i = 0; i < 2; ++i) tmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
  stage(x + c3 * h, k3);
  for (int i = 0; i < 2; ++i) tmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
  stage(x + c4 * h, k4);
  for (int i = 0; i < 2; ++i)
    tmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
  stage(x + c5 * h, k5);
  for (int i = 0; i < 2; ++i)
    tmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
  stage(x + h, k6);
  for (int i = 0; i < 2; ++i)
    out.y[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
  tmp = out.y;
  stage(x + h, out.dydx);
  if (!out.domain_ok) return out;

  double sum = 0.0;
  for (int i = 0; i < 2; ++i) {
    const double err = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                            e7 * out.dydx[i]);
    const double scale = atol + rtol * std::max(std::abs(y[i]), std::abs(out.y[i]));
    sum += (err / scale) * (err / scale);
  }
  out.error = std::sqrt(sum / 2.0);
  return out;
}

/// Proportional step-size update for a fifth order method.
inline double next_step_factor(double error, bool accepted) {
  constexpr double safety = 0.9, min_factor = 0.2, max_factor = 5.0;
  double factor = error > 0.0 ? safety * std::pow(error, -0.2) : max_factor;
  factor = std::clamp(factor, min_factor, max_factor);
  return accepted ? factor : std::min(factor, 1.0);
}

}  // namespace polystab::ode
