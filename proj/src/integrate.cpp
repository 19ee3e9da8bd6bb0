#include "polystab/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "polystab/autosys.hpp"
#include "polystab/kcc.hpp"
#include "polystab/ode.hpp"

namespace polystab {

namespace {

using ode::State2;

void check_tolerance(double tol) {
  if (!(tol >= 1e-14 && tol <= 1e-4)) {
    std::ostringstream os;
    os << "tolerance must lie in [1e-14, 1e-4], got " << tol;
    throw InvalidArgument(os.str());
  }
}

double min_step(double x) { return 1e-14 * std::max(1.0, std::abs(x)); }

// Source term theta^n of the Lane-Emden equation. Non-integer powers of a
// negative theta can only be requested by trial stages past the surface;
// those see the clamped value 0.
double density_term(double n, double theta) {
  if (is_integer_index(n)) return std::pow(theta, n);
  return theta > 0.0 ? std::pow(theta, n) : 0.0;
}

ProfilePoint make_profile_point(double n, double xi, const State2& y) {
  ProfilePoint p;
  p.xi = xi;
  p.theta = y[0];
  p.dtheta = y[1];
  if (y[0] > 0.0 && y[1] < 0.0) p.milne = to_milne({xi, y[0], y[1]}, n);
  p.p11 = deviation_curvature_profile(n, xi, std::max(y[0], 0.0));
  return p;
}

}  // namespace

std::string_view to_string(IntegrationStatus status) {
  switch (status) {
    case IntegrationStatus::Complete: return "complete";
    case IntegrationStatus::DomainStop: return "domain-stop";
    case IntegrationStatus::StepUnderflow: return "step-underflow";
  }
  return "?";
}

PhysicalState series_start(double n, double xi0) {
  if (!(xi0 > 0.0 && xi0 <= 1e-2)) {
    std::ostringstream os;
    os << "series start requires 0 < xi0 <= 1e-2, got " << xi0;
    throw InvalidArgument(os.str());
  }
  const double x2 = xi0 * xi0;
  return {xi0, 1.0 - x2 / 6.0 + n * x2 * x2 / 120.0, -xi0 / 3.0 + n * x2 * xi0 / 30.0};
}

Profile integrate_physical(double n, double xi_max, double tol) {
  if (!std::isfinite(n) || n < 0.0) {
    std::ostringstream os;
    os << "polytropic index must be finite and non-negative, got " << n;
    throw InvalidArgument(os.str());
  }
  if (!(xi_max > kSeriesStart) || !std::isfinite(xi_max)) {
    std::ostringstream os;
    os << "xi_max must exceed the series start " << kSeriesStart << ", got " << xi_max;
    throw InvalidArgument(os.str());
  }
  check_tolerance(tol);

  auto rhs = [n](double xi, const State2& y, State2& f) {
    f[0] = y[1];
    f[1] = -density_term(n, y[0]) - 2.0 * y[1] / xi;
    return true;
  };

  Profile profile;
  profile.n = n;
  profile.tol = tol;
  profile.xi_max = xi_max;

  const PhysicalState start = series_start(n, kSeriesStart);
  double x = start.xi;
  State2 y{start.theta, start.dtheta};
  State2 f{};
  rhs(x, y, f);
  profile.points.push_back(make_profile_point(n, x, y));

  double h = kSeriesStart;
  while (true) {
    const double remaining = xi_max - x;
    if (remaining <= min_step(x)) {
      profile.truncated = true;
      break;
    }
    const bool last = h >= remaining;
    if (last) h = remaining;

    const auto step = ode::dormand_prince_step(rhs, x, y, f, h, tol, tol);
    if (step.error > 1.0) {
      h *= ode::next_step_factor(step.error, false);
      if (h < min_step(x)) {
        profile.status = IntegrationStatus::StepUnderflow;
        break;
      }
      continue;
    }

    if (step.y[0] < 0.0) {
      // The surface lies inside (x, x + h]. Bisect on the length of a step
      // taken from the last accepted state until theta lands in
      // [0, kSurfaceTolerance].
      double lo = 0.0, hi = h;
      ode::StepResult best{};
      double best_h = 0.0;
      for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const auto trial = ode::dormand_prince_step(rhs, x, y, f, mid, tol, tol);
        if (trial.y[0] < 0.0) {
          hi = mid;
        } else {
          lo = mid;
          best = trial;
          best_h = mid;
          if (trial.y[0] <= kSurfaceTolerance) break;
        }
        if (hi - lo <= std::numeric_limits<double>::epsilon() * x) break;
      }
      if (best_h > 0.0) {
        x += best_h;
        y = best.y;
        profile.points.push_back(make_profile_point(n, x, y));
      }
      profile.surface = x;
      break;
    }

    x = last ? xi_max : x + h;
    y = step.y;
    f = step.dydx;
    profile.points.push_back(make_profile_point(n, x, y));
    if (y[0] <= kSurfaceTolerance) {
      profile.surface = x;
      break;
    }
    h *= ode::next_step_factor(step.error, true);
  }
  return profile;
}

std::optional<PhysicalState> closed_form(double n, double xi) {
  if (n == 0.0) return PhysicalState{xi, 1.0 - xi * xi / 6.0, -xi / 3.0};
  if (n == 1.0) {
    if (std::abs(xi) < 1e-3) {
      const double x2 = xi * xi;
      return PhysicalState{xi, 1.0 - x2 / 6.0 + x2 * x2 / 120.0, -xi / 3.0 + x2 * xi / 30.0};
    }
    return PhysicalState{xi, std::sin(xi) / xi, (xi * std::cos(xi) - std::sin(xi)) / (xi * xi)};
  }
  if (n == 5.0) {
    const double base = 1.0 + xi * xi / 3.0;
    return PhysicalState{xi, 1.0 / std::sqrt(base), -(xi / 3.0) / (base * std::sqrt(base))};
  }
  return std::nullopt;
}

AutonomousState to_autonomous(const PolytropeConfig& config, const PhysicalState& s,
                              double xi_s) {
  if (!(s.xi > 0.0)) throw DomainError("transform to (w, t) is singular at xi <= 0");
  if (!(xi_s > 0.0)) throw InvalidArgument("reference radius xi_s must be positive");
  const double alpha = 2.0 / (config.n() - 1.0);
  const double scale = std::pow(s.xi, alpha) / config.b();
  const double w = s.theta * scale;
  const double dw_dxi = (s.dtheta + s.theta * alpha / s.xi) * scale;
  return {std::log(xi_s / s.xi), w, -s.xi * dw_dxi};
}

PhysicalState to_physical(const PolytropeConfig& config, const AutonomousState& s, double xi_s) {
  if (!(xi_s > 0.0)) throw InvalidArgument("reference radius xi_s must be positive");
  const double alpha = 2.0 / (config.n() - 1.0);
  const double xi = xi_s * std::exp(-s.t);
  const double scale = config.b() * std::pow(xi, -alpha);
  return {xi, scale * s.w, -scale * (alpha * s.w + s.q) / xi};
}

MilneState to_milne(const PhysicalState& s, double n) {
  if (!(s.theta > 0.0) || !(s.dtheta < 0.0)) {
    std::ostringstream os;
    os << "Milne variables need theta > 0 and theta' < 0, got theta = " << s.theta
       << ", theta' = " << s.dtheta;
    throw DomainError(os.str());
  }
  return {-s.xi * std::pow(s.theta, n) / s.dtheta, -s.xi * s.dtheta / s.theta};
}

Trajectory integrate_autonomous(const PolytropeConfig& config, const AutonomousState& initial,
                                double t_end, double tol) {
  check_tolerance(tol);
  if (!std::isfinite(initial.t) || !std::isfinite(initial.w) || !std::isfinite(initial.q) ||
      !std::isfinite(t_end)) {
    throw InvalidArgument("initial state and end time must be finite");
  }

  const bool integer_n = is_integer_index(config.n());
  auto rhs = [&config, integer_n](double, const State2& y, State2& f) {
    if (!integer_n && y[0] < 0.0) return false;
    const auto v = vector_field(config, {0.0, y[0], y[1]});
    f = {v.dw, v.dq};
    return true;
  };

  Trajectory out;
  out.states.push_back(initial);

  double x = initial.t;
  State2 y{initial.w, initial.q};
  State2 f{};
  if (!rhs(x, y, f)) {
    out.status = IntegrationStatus::DomainStop;
    return out;
  }

  const double direction = t_end >= x ? 1.0 : -1.0;
  double h = 1e-3;
  while (true) {
    const double remaining = std::abs(t_end - x);
    if (remaining <= min_step(x)) break;
    const bool last = h >= remaining;
    if (last) h = remaining;

    const auto step = ode::dormand_prince_step(rhs, x, y, f, direction * h, tol, tol);
    if (!step.domain_ok || step.error > 1.0) {
      h *= step.domain_ok ? ode::next_step_factor(step.error, false) : 0.5;
      if (h < min_step(x)) {
        out.status =
            step.domain_ok ? IntegrationStatus::StepUnderflow : IntegrationStatus::DomainStop;
        break;
      }
      continue;
    }

    x = last ? t_end : x + direction * h;
    y = step.y;
    f = step.dydx;
    out.states.push_back({x, y[0], y[1]});
    h *= ode::next_step_factor(step.error, true);
  }
  return out;
}

}  // namespace polystab
