#include "polystab/autosys.hpp"

#include <cmath>
#include <sstream>

namespace polystab {

double real_power(double x, double p) {
  if (x < 0.0 && !is_integer_index(p)) {
    std::ostringstream os;
    os << "negative base " << x << " raised to non-integer power " << p;
    throw DomainError(os.str());
  }
  return std::pow(x, p);
}

double power_term(const PolytropeConfig& config, double w) {
  const double n = config.n();
  return std::pow(config.b(), n - 1.0) * real_power(w, n - 1.0);
}

double nontrivial_power_term(double n) { return 2.0 * (n - 3.0) / ((n - 1.0) * (n - 1.0)); }

double g1(const PolytropeConfig& config, double w, double q) {
  const double n = config.n();
  const double nm1 = n - 1.0;
  const double damping = -(n - 5.0) / nm1 * q;
  const double linear = 2.0 * (3.0 - n) / (nm1 * nm1) * w;
  const double nonlinear = std::pow(config.b(), nm1) * real_power(w, n);
  return 0.5 * (damping + linear + nonlinear);
}

VectorFieldValue vector_field(const PolytropeConfig& config, const AutonomousState& s) {
  return {s.q, -2.0 * g1(config, s.w, s.q)};
}

CriticalPointSet critical_points(const PolytropeConfig& config) {
  const double n = config.n();
  CriticalPointSet set;
  set.points.push_back({CriticalPointKind::X0, 0.0, 0.0});

  if (std::abs(n - 3.0) <= kBoundaryTolerance) {
    set.coincident = true;
    return set;
  }

  CriticalPoint xn{CriticalPointKind::Xn, std::nullopt, nontrivial_power_term(n)};
  if (n > 3.0) xn.w0 = std::pow(xn.power_term, 1.0 / (n - 1.0)) / config.b();
  set.points.push_back(xn);
  return set;
}

double residual(const PolytropeConfig& config, const CriticalPoint& point) {
  if (point.formal()) throw InvalidArgument("critical point has no real coordinate");
  return std::abs(g1(config, *point.w0, 0.0));
}

}  // namespace polystab
