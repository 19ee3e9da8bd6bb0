#pragma once

#include <array>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polystab {

/// Raised when a polytrope configuration or an argument violates its
/// documented range (n <= 1 for the autonomous analysis, B <= 0, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a fractional power would be taken of a negative base, or a
/// transform is evaluated where it is singular.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Distance below which n is considered to sit exactly on a regime boundary.
inline constexpr double kBoundaryTolerance = 1e-9;

/// The index where the nontrivial equilibrium turns from a node into a
/// spiral: the positive root of 7 n^2 - 22 n - 1.
double critical_index_nstar();

/// Regime boundaries {3, n*, 5}, in increasing order.
std::array<double, 3> regime_boundaries();

/// The boundary within kBoundaryTolerance of n, if any.
std::optional<double> nearest_boundary(double n);

/// Human-readable name of a regime boundary ("3", "(11+8*sqrt(2))/7", "5").
std::string boundary_name(double boundary);

bool is_integer_index(double n);

/// One problem instance of the transformed Emden-Fowler system.
///
/// The autonomous (w, q) representation is singular at n = 1 and the
/// analysis is restricted to n > 1, so construction enforces n > 1, B > 0.
class PolytropeConfig {
 public:
  explicit PolytropeConfig(double n, double b = 1.0);

  double n() const { return n_; }
  double b() const { return b_; }

 private:
  double n_;
  double b_;
};

/// A point (w, q) of the autonomous system at logarithmic radius t.
struct AutonomousState {
  double t = 0.0;
  double w = 0.0;
  double q = 0.0;
};

/// A point (xi, theta, theta') on a Lane-Emden profile.
struct PhysicalState {
  double xi = 0.0;
  double theta = 1.0;
  double dtheta = 0.0;
};

/// Milne homology invariants (u, v).
struct MilneState {
  double u = 0.0;
  double v = 0.0;
};

enum class CriticalPointKind { X0, Xn };

/// An equilibrium of the autonomous system; q0 is always zero.
///
/// `power_term` holds B^{n-1} w0^{n-1}. For 1 < n < 3 the nontrivial point has
/// no real coordinate, but the power term is still real (and negative), which
/// is all the eigenvalue, curvature and Hessian formulas need.
struct CriticalPoint {
  CriticalPointKind kind = CriticalPointKind::X0;
  std::optional<double> w0;
  double power_term = 0.0;

  /// True when the point has no real coordinate.
  bool formal() const { return !w0.has_value(); }
};

enum class StabilityClassification {
  NodalSink,
  NodalSource,
  SaddlePoint,
  SpiralSink,
  SpiralSource,
  Boundary,
};

enum class StabilityVerdict { Stable, AsymptoticallyStable, Unstable, Inconclusive };

using EigenPair = std::array<std::complex<double>, 2>;

struct LinearAssessment {
  StabilityClassification classification = StabilityClassification::Boundary;
  StabilityVerdict verdict = StabilityVerdict::Inconclusive;
  EigenPair eigenvalues{};
};

struct JacobiAssessment {
  double deviation_curvature = 0.0;
  StabilityVerdict verdict = StabilityVerdict::Inconclusive;
};

struct LyapunovAssessment {
  std::array<double, 2> hessian_eigenvalues{};
  bool is_local_minimum = false;
  double vdot_coefficient = 0.0;
  StabilityVerdict verdict = StabilityVerdict::Inconclusive;
};

/// Verdicts of the three methods for one critical point.
struct StabilityReport {
  CriticalPoint point;
  LinearAssessment linear;
  JacobiAssessment jacobi;
  LyapunovAssessment lyapunov;
};

std::string_view to_string(CriticalPointKind kind);
std::string_view to_string(StabilityClassification c);
std::string_view to_string(StabilityVerdict v);

}  // namespace polystab
