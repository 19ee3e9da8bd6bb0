#include "polystab/analysis.hpp"

#include <cmath>
#include <future>
#include <limits>
#include <sstream>

#include "polystab/kcc.hpp"
#include "polystab/linstab.hpp"
#include "polystab/lyapunov.hpp"

namespace polystab {

namespace {

constexpr double kSampleMargin = 0.05;
constexpr double kLastRegimeSampleCap = 10.0;

struct Regime {
  std::string label;
  double lower;
  double upper;
  double representative;
};

std::vector<Regime> regimes() {
  const double nstar = critical_index_nstar();
  constexpr double inf = std::numeric_limits<double>::infinity();
  return {
      {"1 < n < 3", 1.0, 3.0, 2.0},
      {"3 < n < (11+8*sqrt(2))/7", 3.0, nstar, 3.1},
      {"(11+8*sqrt(2))/7 < n < 5", nstar, 5.0, 3.5},
      {"5 < n", 5.0, inf, 6.0},
  };
}

MethodVerdicts verdicts_of(const StabilityReport& r) {
  return {r.linear.verdict, r.jacobi.verdict, r.lyapunov.verdict};
}

}  // namespace

BoundaryIndex::BoundaryIndex(double n, double boundary)
    : InvalidArgument([&] {
        std::ostringstream os;
        os.precision(17);
        os << "n = " << n << " lies on the regime boundary n = " << boundary_name(boundary);
        return os.str();
      }()),
      boundary_(boundary) {}

std::string regime_label(double n) {
  if (nearest_boundary(n)) return {};
  for (const auto& r : regimes()) {
    if (n > r.lower && n < r.upper) return r.label;
  }
  return {};
}

StabilityReport analyze_point(const PolytropeConfig& config, const CriticalPoint& point) {
  return {point, classify_linear(config, point), classify_jacobi(config, point),
          classify_lyapunov(config, point)};
}

Analysis analyze(const PolytropeConfig& config) {
  if (const auto b = nearest_boundary(config.n())) throw BoundaryIndex(config.n(), *b);
  const auto set = critical_points(config);
  Analysis out{config, regime_label(config.n()), set.coincident, {}};
  for (const auto& p : set.points) out.reports.push_back(analyze_point(config, p));
  return out;
}

std::string table_word(StabilityVerdict v) {
  switch (v) {
    case StabilityVerdict::Stable:
    case StabilityVerdict::AsymptoticallyStable:
      return "stable";
    case StabilityVerdict::Unstable:
      return "unstable";
    case StabilityVerdict::Inconclusive:
      break;
  }
  return "inconclusive";
}

std::vector<std::vector<double>> regime_samples(int samples_per_regime) {
  if (samples_per_regime < 1) throw InvalidArgument("samples per regime must be at least 1");
  std::vector<std::vector<double>> out;
  for (const auto& r : regimes()) {
    if (samples_per_regime == 1) {
      out.push_back({r.representative});
      continue;
    }
    const double lo = r.lower + kSampleMargin;
    const double hi = std::isfinite(r.upper) ? r.upper - kSampleMargin : kLastRegimeSampleCap;
    std::vector<double> s;
    for (int i = 0; i < samples_per_regime; ++i) {
      s.push_back(lo + (hi - lo) * i / (samples_per_regime - 1));
    }
    out.push_back(std::move(s));
  }
  return out;
}

StabilityTable build_table(int samples_per_regime) {
  const auto samples = regime_samples(samples_per_regime);
  const auto defs = regimes();

  StabilityTable table;
  for (std::size_t i = 0; i < defs.size(); ++i) {
    TableRow row{defs[i].label, defs[i].lower, defs[i].upper, samples[i], {}, {}, true};
    bool first = true;
    for (double n : samples[i]) {
      const auto a = analyze(PolytropeConfig{n});
      const MethodVerdicts origin = verdicts_of(a.reports.at(0));
      const MethodVerdicts nontrivial = verdicts_of(a.reports.at(1));
      if (first) {
        row.origin = origin;
        row.nontrivial = nontrivial;
        first = false;
      } else if (origin != row.origin || nontrivial != row.nontrivial) {
        row.consistent = false;
      }
    }
    table.rows.push_back(std::move(row));
  }

  table.notes = {
      "Rows give the verdicts for the nontrivial equilibrium Xn; on 1 < n < 3 Xn has no real "
      "coordinate and is classified formally from B^(n-1) w^(n-1) = 2(n-3)/(n-1)^2 < 0. This "
      "reading is an interpretation: it is the only one consistent with all four rows.",
      "Lyapunov 'stable' means asymptotically stable (local minimum of V and dV/dt < 0); a "
      "failed certificate is 'inconclusive', never 'unstable'.",
      "The origin X0 is reported separately: on 1 < n < 3 it is a linearly stable nodal sink "
      "with a Lyapunov certificate, which differs from the first row if that row is read as "
      "describing X0. The discrepancy is reported, not resolved.",
  };
  return table;
}

PhasePortrait phase_portrait(const PolytropeConfig& config, int grid, double t_end, double tol) {
  if (grid < 1) throw InvalidArgument("grid must be at least 1");
  if (!std::isfinite(t_end)) throw InvalidArgument("t_end must be finite");

  auto set = critical_points(config);
  CriticalPoint centre = set.points.front();
  for (const auto& p : set.points) {
    if (p.kind == CriticalPointKind::Xn && !p.formal()) centre = p;
  }
  const double w0 = centre.w0.value_or(0.0);
  const bool around_origin = centre.kind == CriticalPointKind::X0;
  const double radius = kPhaseRadiusFraction * (around_origin ? 1.0 : w0);

  std::vector<AutonomousState> starts;
  auto offset = [grid](int i) { return grid == 1 ? 1.0 : -1.0 + 2.0 * i / (grid - 1); };
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      const double q = grid == 1 ? 0.0 : radius * offset(j);
      double w;
      if (around_origin) {
        w = 2.0 * radius * (i + 1) / grid;
      } else {
        w = w0 + radius * offset(i);
        if (w == w0 && q == 0.0) continue;
      }
      starts.push_back({0.0, w, q});
    }
  }

  std::vector<std::future<Trajectory>> jobs;
  jobs.reserve(starts.size());
  for (const auto& s : starts) {
    jobs.push_back(std::async(std::launch::async, [&config, s, t_end, tol] {
      return integrate_autonomous(config, s, t_end, tol);
    }));
  }

  PhasePortrait out{config, std::move(set), centre, radius, t_end, tol, {}};
  for (auto& j : jobs) out.trajectories.push_back(j.get());
  return out;
}

}  // namespace polystab
