#pragma once

#include <vector>

#include "polystab/domain.hpp"

namespace polystab {

struct VectorFieldValue {
  double dw = 0.0;
  double dq = 0.0;
};

/// x^p with the real-power domain rule used throughout: negative bases are
/// only allowed when p is an integer.
double real_power(double x, double p);

/// B^{n-1} w^{n-1}.
double power_term(const PolytropeConfig& config, double w);

/// 2(n-3)/(n-1)^2, the value of the power term at the nontrivial equilibrium.
/// Independent of B.
double nontrivial_power_term(double n);

/// The function G^1(w, q) of the second order form w'' + 2 G^1(w, w') = 0.
double g1(const PolytropeConfig& config, double w, double q);

/// dw/dt = q, dq/dt = -2 G^1(w, q).
VectorFieldValue vector_field(const PolytropeConfig& config, const AutonomousState& s);

struct CriticalPointSet {
  std::vector<CriticalPoint> points;
  /// Set at n = 3, where the nontrivial point merges into the origin.
  bool coincident = false;
};

/// Equilibria on the q = 0 line in closed form: always X0; Xn unless it
/// coincides with X0. Xn carries a real coordinate only for n > 3.
CriticalPointSet critical_points(const PolytropeConfig& config);

/// |G^1(w0, 0)|. Throws InvalidArgument for a formal point.
double residual(const PolytropeConfig& config, const CriticalPoint& point);

}  // namespace polystab
