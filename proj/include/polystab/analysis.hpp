#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polystab/autosys.hpp"
#include "polystab/domain.hpp"
#include "polystab/integrate.hpp"

namespace polystab {

/// Label of the open regime containing n: "1 < n < 3", "3 < n < n*",
/// "n* < n < 5" or "5 < n". Empty on a boundary.
std::string regime_label(double n);

/// Runs the three methods on one critical point.
StabilityReport analyze_point(const PolytropeConfig& config, const CriticalPoint& point);

struct Analysis {
  PolytropeConfig config;
  std::string regime;
  bool coincident = false;
  std::vector<StabilityReport> reports;
};

/// Reports for every critical point of the configuration. Throws
/// BoundaryIndex when n sits on a regime boundary.
Analysis analyze(const PolytropeConfig& config);

/// n within kBoundaryTolerance of 3, n* or 5.
class BoundaryIndex : public InvalidArgument {
 public:
  BoundaryIndex(double n, double boundary);
  double boundary() const { return boundary_; }

 private:
  double boundary_;
};

/// Verdict words used in the stability table.
std::string table_word(StabilityVerdict v);

struct MethodVerdicts {
  StabilityVerdict linear = StabilityVerdict::Inconclusive;
  StabilityVerdict jacobi = StabilityVerdict::Inconclusive;
  StabilityVerdict lyapunov = StabilityVerdict::Inconclusive;

  bool operator==(const MethodVerdicts&) const = default;
};

struct TableRow {
  std::string regime_label;
  double lower = 0.0;
  double upper = 0.0;  ///< infinity for the last row
  std::vector<double> samples;
  /// Verdicts for the nontrivial point Xn; these form the table proper.
  MethodVerdicts nontrivial;
  /// Verdicts for the origin X0, reported alongside.
  MethodVerdicts origin;
  /// False if any sample disagreed with the first one.
  bool consistent = true;
};

struct StabilityTable {
  std::vector<TableRow> rows;
  std::vector<std::string> notes;
};

/// Representative indices per regime. One sample per regime uses the
/// defaults 2, 3.1, 3.5, 6; more samples are spread evenly, keeping 0.05 away
/// from every boundary (the last regime is sampled up to n = 10).
std::vector<std::vector<double>> regime_samples(int samples_per_regime);

/// Four-row stability table (B = 1).
StabilityTable build_table(int samples_per_regime = 1);

struct PhasePortrait {
  PolytropeConfig config;
  CriticalPointSet critical;
  CriticalPoint centre;
  double radius = 0.0;
  double t_end = 0.0;
  double tol = 0.0;
  std::vector<Trajectory> trajectories;
};

/// Relative size of the box of initial conditions around the centre point.
inline constexpr double kPhaseRadiusFraction = 0.02;

/// Integrates a grid x grid block of initial conditions around Xn, or
/// around X0 when Xn has no real coordinate. The box half-width is
/// kPhaseRadiusFraction times w0 (or times 1 around X0); around X0 only
/// w > 0 starts are used. Trajectories run concurrently.
PhasePortrait phase_portrait(const PolytropeConfig& config, int grid, double t_end, double tol);

}  // namespace polystab
