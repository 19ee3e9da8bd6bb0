#include "polystab/kcc.hpp"

#include <cmath>
#include <sstream>

#include "polystab/autosys.hpp"

namespace polystab {

double nonlinear_connection(const PolytropeConfig& config) {
  const double n = config.n();
  return -(n - 5.0) / (2.0 * (n - 1.0));
}

double berwald_connection(const PolytropeConfig& /*config*/) { return 0.0; }

double deviation_curvature(const PolytropeConfig& config, double power_term) {
  return 0.25 - config.n() * power_term;
}

KccInvariants kcc_invariants(const PolytropeConfig& config, double w, double q) {
  const double n = config.n();
  const double nm1 = n - 1.0;

  const double g = g1(config, w, q);
  const double dg_dx = 0.5 * (2.0 * (3.0 - n) / (nm1 * nm1) + n * power_term(config, w));
  const double connection = nonlinear_connection(config);
  const double berwald = berwald_connection(config);
  // N^1_1 has no explicit x or t dependence.
  const double dn_dx = 0.0;
  const double dn_dt = 0.0;

  KccInvariants out;
  out.nonlinear_connection = connection;
  out.berwald = berwald;
  out.deviation_curvature =
      -2.0 * dg_dx - 2.0 * g * berwald + q * dn_dx + connection * connection + dn_dt;
  // (dP^1_1/dy - dP^1_1/dy) / 3
  out.torsion = 0.0;
  return out;
}

double deviation_curvature_physical(double n, double u, double v) { return 0.25 - n * u * v; }

double deviation_curvature_profile(double n, double xi, double theta) {
  return 0.25 - n * xi * xi * real_power(theta, n - 1.0);
}

double deviation_curvature_energy(double n, double density_ratio, double energy_ratio) {
  return 0.25 - 1.5 * n * density_ratio / energy_ratio;
}

bool jacobi_condition_physical(double n, double density_ratio, double energy_ratio) {
  if (!(density_ratio > 0.0) || !(energy_ratio > 0.0)) {
    std::ostringstream os;
    os << "density and energy ratios must be positive, got " << density_ratio << " and "
       << energy_ratio;
    throw DomainError(os.str());
  }
  return energy_ratio < 6.0 * n * density_ratio;
}

JacobiAssessment classify_jacobi(const PolytropeConfig& config, const CriticalPoint& point) {
  JacobiAssessment out;
  out.deviation_curvature = deviation_curvature(config, point.power_term);
  if (std::abs(out.deviation_curvature) <= kCurvatureZeroTolerance) {
    out.verdict = StabilityVerdict::Inconclusive;
  } else {
    out.verdict =
        out.deviation_curvature < 0.0 ? StabilityVerdict::Stable : StabilityVerdict::Unstable;
  }
  return out;
}

}  // namespace polystab
