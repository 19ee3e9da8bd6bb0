#include "polystab/linstab.hpp"

#include <algorithm>
#include <cmath>

namespace polystab {

Jacobian2 jacobian(const PolytropeConfig& config, double power_term) {
  const double n = config.n();
  const double nm1 = n - 1.0;
  return {0.0, 1.0, 2.0 * (n - 3.0) / (nm1 * nm1) - n * power_term, (n - 5.0) / nm1};
}

EigenPair eigenvalues_closed_form(const PolytropeConfig& config, double power_term) {
  const double n = config.n();
  const double centre = (n - 5.0) / (2.0 * (n - 1.0));
  const double radicand = 1.0 - 4.0 * n * power_term;
  if (radicand >= 0.0) {
    const double half = 0.5 * std::sqrt(radicand);
    return {std::complex<double>{centre + half, 0.0}, std::complex<double>{centre - half, 0.0}};
  }
  const double half = 0.5 * std::sqrt(-radicand);
  return {std::complex<double>{centre, half}, std::complex<double>{centre, -half}};
}

EigenPair eigenvalues_numeric(const Jacobian2& j) {
  // lambda^2 + b lambda + c = 0
  const double b = -j.trace();
  const double c = j.determinant();
  const double disc = b * b - 4.0 * c;

  EigenPair roots;
  if (disc >= 0.0) {
    const double s = std::sqrt(disc);
    // Avoid cancellation: compute the larger-magnitude root first.
    const double qq = -0.5 * (b + std::copysign(s, b));
    if (qq == 0.0) {
      roots = {std::complex<double>{0.0, 0.0}, std::complex<double>{0.0, 0.0}};
    } else {
      roots = {std::complex<double>{qq, 0.0}, std::complex<double>{c / qq, 0.0}};
    }
  } else {
    const double re = -0.5 * b;
    const double im = 0.5 * std::sqrt(-disc);
    roots = {std::complex<double>{re, im}, std::complex<double>{re, -im}};
  }

  std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) {
    if (x.real() != y.real()) return x.real() > y.real();
    return x.imag() > y.imag();
  });
  return roots;
}

StabilityClassification classify_eigenvalues(const EigenPair& eigenvalues) {
  const auto& [l1, l2] = eigenvalues;
  const bool complex_pair = l1.imag() != 0.0 || l2.imag() != 0.0;

  if (complex_pair) {
    const double re = l1.real();
    if (std::abs(re) <= kEigenZeroTolerance) return StabilityClassification::Boundary;
    return re < 0.0 ? StabilityClassification::SpiralSink : StabilityClassification::SpiralSource;
  }

  const double hi = std::max(l1.real(), l2.real());
  const double lo = std::min(l1.real(), l2.real());
  if (hi == lo) return StabilityClassification::Boundary;
  if (std::abs(hi) <= kEigenZeroTolerance || std::abs(lo) <= kEigenZeroTolerance) {
    return StabilityClassification::Boundary;
  }
  if (hi < 0.0) return StabilityClassification::NodalSink;
  if (lo > 0.0) return StabilityClassification::NodalSource;
  return StabilityClassification::SaddlePoint;
}

StabilityVerdict verdict_for(StabilityClassification c) {
  switch (c) {
    case StabilityClassification::NodalSink:
    case StabilityClassification::SpiralSink:
      return StabilityVerdict::Stable;
    case StabilityClassification::NodalSource:
    case StabilityClassification::SaddlePoint:
    case StabilityClassification::SpiralSource:
      return StabilityVerdict::Unstable;
    case StabilityClassification::Boundary:
      break;
  }
  return StabilityVerdict::Inconclusive;
}

LinearAssessment classify_linear(const PolytropeConfig& config, const CriticalPoint& point) {
  LinearAssessment out;
  out.eigenvalues = eigenvalues_closed_form(config, point.power_term);
  out.classification = nearest_boundary(config.n()) ? StabilityClassification::Boundary
                                                    : classify_eigenvalues(out.eigenvalues);
  out.verdict = verdict_for(out.classification);
  return out;
}

}  // namespace polystab
