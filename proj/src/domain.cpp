#include "polystab/domain.hpp"

#include <cmath>
#include <sstream>

namespace polystab {

double critical_index_nstar() { return (11.0 + 8.0 * std::sqrt(2.0)) / 7.0; }

std::array<double, 3> regime_boundaries() { return {3.0, critical_index_nstar(), 5.0}; }

std::optional<double> nearest_boundary(double n) {
  for (double b : regime_boundaries()) {
    if (std::abs(n - b) <= kBoundaryTolerance) return b;
  }
  return std::nullopt;
}

std::string boundary_name(double boundary) {
  if (boundary == critical_index_nstar()) return "(11+8*sqrt(2))/7";
  std::ostringstream os;
  os << boundary;
  return os.str();
}

bool is_integer_index(double n) { return std::isfinite(n) && n == std::floor(n); }

PolytropeConfig::PolytropeConfig(double n, double b) : n_(n), b_(b) {
  if (!std::isfinite(n) || !(n > 1.0)) {
    std::ostringstream os;
    os << "polytropic index must satisfy n > 1, got " << n;
    throw InvalidArgument(os.str());
  }
  if (!std::isfinite(b) || !(b > 0.0)) {
    std::ostringstream os;
    os << "scale constant must satisfy B > 0, got " << b;
    throw InvalidArgument(os.str());
  }
}

std::string_view to_string(CriticalPointKind kind) {
  switch (kind) {
    case CriticalPointKind::X0: return "X0";
    case CriticalPointKind::Xn: return "Xn";
  }
  return "?";
}

std::string_view to_string(StabilityClassification c) {
  switch (c) {
    case StabilityClassification::NodalSink: return "NodalSink";
    case StabilityClassification::NodalSource: return "NodalSource";
    case StabilityClassification::SaddlePoint: return "SaddlePoint";
    case StabilityClassification::SpiralSink: return "SpiralSink";
    case StabilityClassification::SpiralSource: return "SpiralSource";
    case StabilityClassification::Boundary: return "Boundary";
  }
  return "?";
}

std::string_view to_string(StabilityVerdict v) {
  switch (v) {
    case StabilityVerdict::Stable: return "Stable";
    case StabilityVerdict::AsymptoticallyStable: return "AsymptoticallyStable";
    case StabilityVerdict::Unstable: return "Unstable";
    case StabilityVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

}  // namespace polystab
