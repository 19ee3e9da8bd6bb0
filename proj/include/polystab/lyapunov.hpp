#pragma once

#include <array>

#include "polystab/domain.hpp"

namespace polystab {

/// V(w, q) = q^2/2 - (n-3)/(n-1)^2 w^2 + B^{n-1}/(n+1) w^{n+1}
double lyapunov_function(const PolytropeConfig& config, double w, double q);

/// (dV/dw, dV/dq); zero exactly where the vector field is.
std::array<double, 2> lyapunov_gradient(const PolytropeConfig& config, double w, double q);

/// The Hessian of V is diagonal; returns (d2V/dw2, 1) evaluated where
/// B^{n-1} w^{n-1} equals `power_term`.
std::array<double, 2> hessian_eigenvalues(const PolytropeConfig& config, double power_term);

/// dV/dt along the flow equals this coefficient times q^2.
double v_dot_coefficient(const PolytropeConfig& config);

/// Lower bound on the smaller Hessian eigenvalue for a certified minimum.
inline constexpr double kMinimumTolerance = 1e-9;

/// Local (Hessian-based) assessment. Never returns Unstable: a candidate that
/// fails to certify stability says nothing about instability.
LyapunovAssessment classify_lyapunov(const PolytropeConfig& config, const CriticalPoint& point);

}  // namespace polystab
