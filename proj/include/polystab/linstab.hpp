#pragma once

#include "polystab/domain.hpp"

namespace polystab {

/// Row-major 2x2 matrix.
struct Jacobian2 {
  double a11 = 0.0, a12 = 0.0;
  double a21 = 0.0, a22 = 0.0;

  double trace() const { return a11 + a22; }
  double determinant() const { return a11 * a22 - a12 * a21; }
};

/// Zero tolerance on eigenvalue real parts when deciding sink/source.
inline constexpr double kEigenZeroTolerance = 1e-9;

/// Jacobian of the vector field at a point where B^{n-1} w^{n-1} equals
/// `power_term`. The first row is always (0, 1).
Jacobian2 jacobian(const PolytropeConfig& config, double power_term);

/// lambda_pm = (n-5)/(2(n-1)) pm sqrt(1 - 4 n P)/2, returned as (lambda_+, lambda_-).
/// A negative radicand gives a conjugate pair with lambda_+ in the upper half plane.
EigenPair eigenvalues_closed_form(const PolytropeConfig& config, double power_term);

/// Roots of lambda^2 - tr(J) lambda + det(J), solved without reference to the
/// system's structure. Sorted by descending real part, then descending
/// imaginary part.
EigenPair eigenvalues_numeric(const Jacobian2& j);

/// Hyperbolic classification from an eigenvalue pair. Repeated real roots and
/// real parts within kEigenZeroTolerance of zero give Boundary.
StabilityClassification classify_eigenvalues(const EigenPair& eigenvalues);

StabilityVerdict verdict_for(StabilityClassification c);

/// Linear stability of a critical point. Indices within kBoundaryTolerance of
/// {3, n*, 5} are reported as Boundary without a side being chosen.
LinearAssessment classify_linear(const PolytropeConfig& config, const CriticalPoint& point);

}  // namespace polystab
