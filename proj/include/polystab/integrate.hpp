#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "polystab/domain.hpp"

namespace polystab {

/// Radius at which the physical integration leaves the regular centre.
inline constexpr double kSeriesStart = 1e-4;
/// |theta| accepted as the surface.
inline constexpr double kSurfaceTolerance = 1e-12;
inline constexpr double kDefaultXiMax = 50.0;

enum class IntegrationStatus {
  Complete,       ///< reached the requested end (or the surface)
  DomainStop,     ///< trajectory left the real domain of w^n (non-integer n, w < 0)
  StepUnderflow,  ///< step size collapsed; output ends at the last good state
};

std::string_view to_string(IntegrationStatus status);

struct ProfilePoint {
  double xi = 0.0;
  double theta = 0.0;
  double dtheta = 0.0;
  /// Present while theta > 0 and theta' < 0.
  std::optional<MilneState> milne;
  /// 1/4 - n xi^2 theta^{n-1}
  double p11 = 0.0;
};

struct Profile {
  double n = 0.0;
  double tol = 0.0;
  double xi_max = 0.0;
  std::vector<ProfilePoint> points;
  std::optional<double> surface;
  bool truncated = false;
  IntegrationStatus status = IntegrationStatus::Complete;
};

/// Maclaurin expansion of the regular solution about xi = 0, through xi^4:
/// theta = 1 - xi^2/6 + n xi^4/120, theta' = -xi/3 + n xi^3/30.
/// Requires 0 < xi0 <= 1e-2.
PhysicalState series_start(double n, double xi0);

/// Integrates theta'' + (2/xi) theta' + theta^n = 0 from the series start at
/// kSeriesStart with an adaptive Dormand-Prince 5(4) scheme (absolute and
/// relative tolerance `tol`). Stops at the first zero of theta, located to
/// |theta| <= kSurfaceTolerance, or at xi_max (truncated).
///
/// Accepts any n >= 0. For non-integer n, theta^n is never evaluated at a
/// negative theta.
Profile integrate_physical(double n, double xi_max = kDefaultXiMax, double tol = 1e-10);

/// Known exact solutions for n = 0, 1 and 5; empty for any other n.
std::optional<PhysicalState> closed_form(double n, double xi);

/// theta = B xi^{-2/(n-1)} w, xi = xi_s e^{-t}, q = dw/dt.
AutonomousState to_autonomous(const PolytropeConfig& config, const PhysicalState& s, double xi_s);
PhysicalState to_physical(const PolytropeConfig& config, const AutonomousState& s, double xi_s);

/// u = -xi theta^n / theta', v = -xi theta' / theta. Requires theta > 0 and theta' < 0.
MilneState to_milne(const PhysicalState& s, double n);

struct Trajectory {
  std::vector<AutonomousState> states;
  IntegrationStatus status = IntegrationStatus::Complete;
};

/// Integrates the autonomous (w, q) system from `initial` to t_end with the
/// same adaptive scheme. Every accepted step is recorded.
Trajectory integrate_autonomous(const PolytropeConfig& config, const AutonomousState& initial,
                                double t_end, double tol = 1e-10);

}  // namespace polystab
