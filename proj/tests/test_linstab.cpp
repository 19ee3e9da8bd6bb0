#include <doctest.h>

#include <cmath>
#include <functional>

#include "oracles.hpp"
#include "polystab/autosys.hpp"
#include "polystab/linstab.hpp"

using namespace polystab;

namespace {

CriticalPoint point(double n, CriticalPointKind kind) {
  for (const auto& p : critical_points(PolytropeConfig{n}).points) {
    if (p.kind == kind) return p;
  }
  FAIL("no such point");
  return {};
}

void check_close(std::complex<double> a, std::complex<double> b, double tol) {
  CHECK(std::abs(a.real() - b.real()) <= tol);
  CHECK(std::abs(a.imag() - b.imag()) <= tol);
}

}  // namespace

TEST_CASE("jacobian examples") {
  const auto j2 = jacobian(PolytropeConfig{2.0}, 0.0);
  CHECK(j2.a11 == 0.0);
  CHECK(j2.a12 == 1.0);
  CHECK(j2.a21 == doctest::Approx(-2.0));
  CHECK(j2.a22 == doctest::Approx(-3.0));

  const auto j5 = jacobian(PolytropeConfig{5.0}, 0.25);
  CHECK(j5.a21 == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(j5.a22 == 0.0);

  for (double p : {-3.0, 0.0, 0.7}) {
    const auto j = jacobian(PolytropeConfig{3.7}, p);
    CHECK(j.a11 == 0.0);
    CHECK(j.a12 == 1.0);
  }
}

TEST_CASE("closed-form eigenvalues") {
  SUBCASE("n = 2 at X0") {
    const auto e = eigenvalues_closed_form(PolytropeConfig{2.0}, 0.0);
    check_close(e[0], {-1.0, 0.0}, 1e-15);
    check_close(e[1], {-2.0, 0.0}, 1e-15);
  }
  SUBCASE("n = 4 at Xn") {
    const auto e = eigenvalues_closed_form(PolytropeConfig{4.0}, 2.0 / 9.0);
    check_close(e[0], {-1.0 / 6.0, std::sqrt(23.0) / 6.0}, 1e-14);
    check_close(e[1], {-1.0 / 6.0, -std::sqrt(23.0) / 6.0}, 1e-14);
  }
  SUBCASE("n = 5 at Xn") {
    const auto e = eigenvalues_closed_form(PolytropeConfig{5.0}, 0.25);
    check_close(e[0], {0.0, 1.0}, 1e-15);
    check_close(e[1], {0.0, -1.0}, 1e-15);
  }
  SUBCASE("n = 3.1 at Xn") {
    // (n - 5 pm sqrt(1 + 22n - 7n^2)) / (2(n - 1)), evaluated in 30 digits
    const auto e = eigenvalues_closed_form(PolytropeConfig{3.1}, nontrivial_power_term(3.1));
    check_close(e[0], {-0.12160847644167132, 0.0}, 1e-14);
    check_close(e[1], {-0.78315342832023344, 0.0}, 1e-14);
  }
}

TEST_CASE("numeric 2x2 eigen-solver") {
  auto e = eigenvalues_numeric({0.0, 1.0, -2.0, -3.0});
  check_close(e[0], {-1.0, 0.0}, 1e-15);
  check_close(e[1], {-2.0, 0.0}, 1e-15);

  e = eigenvalues_numeric({0.0, 1.0, -1.0, 0.0});
  check_close(e[0], {0.0, 1.0}, 1e-15);
  check_close(e[1], {0.0, -1.0}, 1e-15);

  e = eigenvalues_numeric({1.0, 0.0, 0.0, 1.0});
  check_close(e[0], {1.0, 0.0}, 1e-15);
  check_close(e[1], {1.0, 0.0}, 1e-15);

  e = eigenvalues_numeric({0.0, 0.0, 0.0, 0.0});
  check_close(e[0], {0.0, 0.0}, 0.0);
}

TEST_CASE("classification from eigenvalues") {
  using C = StabilityClassification;
  using Z = std::complex<double>;
  CHECK(classify_eigenvalues({Z{-1, 0}, Z{-2, 0}}) == C::NodalSink);
  CHECK(classify_eigenvalues({Z{2, 0}, Z{1, 0}}) == C::NodalSource);
  CHECK(classify_eigenvalues({Z{1, 0}, Z{-2, 0}}) == C::SaddlePoint);
  CHECK(classify_eigenvalues({Z{-0.1, 1}, Z{-0.1, -1}}) == C::SpiralSink);
  CHECK(classify_eigenvalues({Z{0.1, 1}, Z{0.1, -1}}) == C::SpiralSource);
  CHECK(classify_eigenvalues({Z{0, 1}, Z{0, -1}}) == C::Boundary);
  CHECK(classify_eigenvalues({Z{-1, 0}, Z{-1, 0}}) == C::Boundary);
  CHECK(classify_eigenvalues({Z{5e-10, 0}, Z{-1, 0}}) == C::Boundary);
}

TEST_CASE("classify_linear against the regime table") {
  using C = StabilityClassification;
  using V = StabilityVerdict;
  struct Case {
    double n;
    CriticalPointKind kind;
    C cls;
    V verdict;
  };
  const Case cases[] = {
      {2.0, CriticalPointKind::X0, C::NodalSink, V::Stable},
      {2.0, CriticalPointKind::Xn, C::SaddlePoint, V::Unstable},
      {3.1, CriticalPointKind::Xn, C::NodalSink, V::Stable},
      {3.5, CriticalPointKind::Xn, C::SpiralSink, V::Stable},
      {3.5, CriticalPointKind::X0, C::SaddlePoint, V::Unstable},
      {6.0, CriticalPointKind::Xn, C::SpiralSource, V::Unstable},
      {6.0, CriticalPointKind::X0, C::SaddlePoint, V::Unstable},
  };
  for (const auto& c : cases) {
    CAPTURE(c.n);
    const auto a = classify_linear(PolytropeConfig{c.n}, point(c.n, c.kind));
    CHECK(a.classification == c.cls);
    CHECK(a.verdict == c.verdict);
  }
}

TEST_CASE("classify_linear reports Boundary on the regime boundaries") {
  for (double n : {3.0, critical_index_nstar(), 5.0, 5.0 + 1e-10}) {
    const auto a = classify_linear(PolytropeConfig{n}, point(n, CriticalPointKind::X0));
    CHECK(a.classification == StabilityClassification::Boundary);
    CHECK(a.verdict == StabilityVerdict::Inconclusive);
  }
}

TEST_CASE("property: classification matches the inequality ranges") {
  using C = StabilityClassification;
  const double ns = critical_index_nstar();
  for (int i = 0; i < 2000; ++i) {
    const double n = oracle::uniform(1.0001, 10.0);
    if (nearest_boundary(n)) continue;
    CAPTURE(n);
    const PolytropeConfig c{n};
    const auto x0 = classify_linear(c, point(n, CriticalPointKind::X0)).classification;
    const auto xn = classify_linear(c, point(n, CriticalPointKind::Xn)).classification;
    CHECK(x0 == (n < 3.0 ? C::NodalSink : C::SaddlePoint));
    if (n < 3.0) CHECK(xn == C::SaddlePoint);
    else if (n < ns) CHECK(xn == C::NodalSink);
    else if (n < 5.0) CHECK(xn == C::SpiralSink);
    else CHECK(xn == C::SpiralSource);
  }
}

TEST_CASE("property: closed form, numeric solver and naive roots agree") {
  for (int i = 0; i < 1000; ++i) {
    const double n = oracle::uniform(1.001, 10.0);
    const double p = oracle::uniform(-3.0, 3.0);
    const PolytropeConfig c{n};
    const auto j = jacobian(c, p);
    const auto closed = eigenvalues_closed_form(c, p);
    const auto numeric = eigenvalues_numeric(j);
    const auto naive = oracle::quadratic_roots(1.0, -j.trace(), j.determinant());
    for (int k = 0; k < 2; ++k) {
      check_close(closed[k], numeric[k], 1e-10);
      check_close(closed[k], naive[k], 1e-10);
    }
    // characteristic polynomial residual, relative to its coefficients
    for (const auto& l : closed) {
      const auto res = l * l - j.trace() * l + j.determinant();
      const double scale = std::norm(l) + std::abs(j.trace() * std::abs(l)) + std::abs(j.determinant());
      CHECK(std::abs(res) <= 1e-12 * std::max(scale, 1.0));
    }
  }
}

TEST_CASE("property: trace identity") {
  for (int i = 0; i < 500; ++i) {
    const double n = oracle::uniform(1.001, 10.0);
    const PolytropeConfig c{n};
    for (const auto& p : critical_points(c).points) {
      const auto e = eigenvalues_closed_form(c, p.power_term);
      CHECK(std::abs((e[0] + e[1]).real() - (n - 5.0) / (n - 1.0)) <= 1e-12);
      CHECK(std::abs((e[0] + e[1]).imag()) <= 1e-12);
    }
  }
}

TEST_CASE("property: Xn discriminant changes sign at nstar on (3, 5)") {
  const double ns = critical_index_nstar();
  for (int i = 0; i < 1000; ++i) {
    const double n = oracle::uniform(3.0, 5.0);
    if (std::abs(n - ns) <= 1e-9 || std::abs(n - 3.0) <= 1e-9) continue;
    const auto e = eigenvalues_closed_form(PolytropeConfig{n}, nontrivial_power_term(n));
    const bool complex_pair = e[0].imag() != 0.0;
    CHECK(complex_pair == (n > ns));
    CHECK(complex_pair == (1.0 + 22.0 * n - 7.0 * n * n < 0.0));
  }
}

TEST_CASE("property: X0 classification is independent of B") {
  for (double n : {1.5, 2.0, 2.9, 3.5, 4.0, 7.0}) {
    const auto ref = classify_linear(PolytropeConfig{n}, point(n, CriticalPointKind::X0));
    for (double b : {0.5, 1.0, 2.0}) {
      const PolytropeConfig c{n, b};
      const auto a = classify_linear(c, critical_points(c).points.at(0));
      CHECK(a.classification == ref.classification);
    }
  }
}

TEST_CASE("jacobian matches finite differences of the vector field") {
  constexpr double h = 1e-6;
  for (double n : {3.5, 4.0, 6.0}) {
    for (double b : {1.0, 2.0}) {
      const PolytropeConfig c{n, b};
      for (const auto& p : critical_points(c).points) {
        CAPTURE(n);
        CAPTURE(b);
        const double w0 = *p.w0;
        const auto j = jacobian(c, p.power_term);
        auto dw = [&](double w) { return vector_field(c, {0.0, w, 0.0}); };
        auto dq = [&](double q) { return vector_field(c, {0.0, w0, q}); };
        // w0 = 0 with non-integer n: only w >= 0 is admissible
        const bool one_sided = w0 == 0.0 && !is_integer_index(n);
        auto fd_w = [&](auto component) {
          auto f = [&](double w) { return component(dw(w)); };
          return one_sided ? oracle::forward_difference(f, w0, h)
                           : oracle::central_difference(f, w0, h);
        };
        auto fd_q = [&](auto component) {
          return oracle::central_difference([&](double q) { return component(dq(q)); }, 0.0, h);
        };
        auto first = [](VectorFieldValue v) { return v.dw; };
        auto second = [](VectorFieldValue v) { return v.dq; };
        CHECK(std::abs(fd_w(first) - j.a11) <= 1e-5);
        CHECK(std::abs(fd_q(first) - j.a12) <= 1e-5);
        CHECK(std::abs(fd_w(second) - j.a21) <= 1e-5);
        CHECK(std::abs(fd_q(second) - j.a22) <= 1e-5);
      }
    }
  }
}
