#include "polystab/lyapunov.hpp"

#include <algorithm>
#include <cmath>

#include "polystab/autosys.hpp"

namespace polystab {

namespace {

double quadratic_coefficient(double n) { return (n - 3.0) / ((n - 1.0) * (n - 1.0)); }

}  // namespace

double lyapunov_function(const PolytropeConfig& config, double w, double q) {
  const double n = config.n();
  return 0.5 * q * q - quadratic_coefficient(n) * w * w +
         std::pow(config.b(), n - 1.0) / (n + 1.0) * real_power(w, n + 1.0);
}

std::array<double, 2> lyapunov_gradient(const PolytropeConfig& config, double w, double q) {
  const double n = config.n();
  return {-2.0 * quadratic_coefficient(n) * w + std::pow(config.b(), n - 1.0) * real_power(w, n),
          q};
}

std::array<double, 2> hessian_eigenvalues(const PolytropeConfig& config, double power_term) {
  const double n = config.n();
  return {-2.0 * quadratic_coefficient(n) + n * power_term, 1.0};
}

double v_dot_coefficient(const PolytropeConfig& config) {
  const double n = config.n();
  return (n - 5.0) / (n - 1.0);
}

LyapunovAssessment classify_lyapunov(const PolytropeConfig& config, const CriticalPoint& point) {
  LyapunovAssessment out;
  out.hessian_eigenvalues = hessian_eigenvalues(config, point.power_term);
  out.is_local_minimum =
      std::min(out.hessian_eigenvalues[0], out.hessian_eigenvalues[1]) > kMinimumTolerance;
  out.vdot_coefficient = v_dot_coefficient(config);
  out.verdict = out.is_local_minimum && out.vdot_coefficient < -kMinimumTolerance
                    ? StabilityVerdict::AsymptoticallyStable
                    : StabilityVerdict::Inconclusive;
  return out;
}

}  // namespace polystab
