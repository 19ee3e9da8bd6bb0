#pragma once

#include "polystab/domain.hpp"

namespace polystab {

/// KCC geometric objects of the one-dimensional path equation
/// x'' + 2 G^1(x, y) = 0 with x = w, y = q.
struct KccInvariants {
  double nonlinear_connection = 0.0;  ///< N^1_1 = dG^1/dy
  double berwald = 0.0;               ///< G^1_11 = dN^1_1/dy
  double deviation_curvature = 0.0;   ///< P^1_1
  double torsion = 0.0;               ///< P^1_11, antisymmetric in its lower indices
};

/// N^1_1 = -(n-5)/(2(n-1)); constant on phase space.
double nonlinear_connection(const PolytropeConfig& config);

/// G^1_11; N^1_1 does not depend on q, so this vanishes.
double berwald_connection(const PolytropeConfig& config);

/// Closed form P^1_1 = 1/4 - n B^{n-1} w^{n-1}.
double deviation_curvature(const PolytropeConfig& config, double power_term);

/// Evaluates the invariants at (w, q) term by term from the general
/// definition, specialised to one dimension:
///
///   P^i_j = -2 dG^i/dx^j - 2 G^l G^i_jl + y^l dN^i_j/dx^l + N^i_l N^l_j + dN^i_j/dt
///
/// Serves as an independent check of the closed form.
KccInvariants kcc_invariants(const PolytropeConfig& config, double w, double q);

/// P^1_1 in Milne variables: 1/4 - n u v.
double deviation_curvature_physical(double n, double u, double v);

/// P^1_1 along a Lane-Emden profile: 1/4 - n xi^2 theta^{n-1}.
double deviation_curvature_profile(double n, double xi, double theta);

/// P^1_1 written with the local density contrast rho/rho_bar and the energy
/// ratio E_i/|E_g|: 1/4 - (3n/2) (rho/rho_bar) / (E_i/|E_g|).
double deviation_curvature_energy(double n, double density_ratio, double energy_ratio);

/// Jacobi stability as an energy condition: E_i/|E_g| < 6 n rho/rho_bar.
/// Both ratios must be positive.
bool jacobi_condition_physical(double n, double density_ratio, double energy_ratio);

/// Magnitude of P^1_1 treated as zero.
inline constexpr double kCurvatureZeroTolerance = 1e-9;

/// Jacobi stability: in one dimension the deviation tensor's only eigenvalue
/// is P^1_1 itself, so the verdict is its sign.
JacobiAssessment classify_jacobi(const PolytropeConfig& config, const CriticalPoint& point);

}  // namespace polystab
