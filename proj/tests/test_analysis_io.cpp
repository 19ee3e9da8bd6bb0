#include <doctest.h>

#include <cmath>
#include <cstring>

#include "polystab/analysis.hpp"
#include "polystab/io.hpp"

using namespace polystab;

TEST_CASE("regime labels") {
  CHECK(regime_label(2.0) == "1 < n < 3");
  CHECK(regime_label(3.1) == "3 < n < (11+8*sqrt(2))/7");
  CHECK(regime_label(3.5) == "(11+8*sqrt(2))/7 < n < 5");
  CHECK(regime_label(6.0) == "5 < n");
  CHECK(regime_label(3.0).empty());
}

TEST_CASE("analyze n = 4") {
  const auto a = analyze(PolytropeConfig{4.0});
  REQUIRE(a.reports.size() == 2);
  const auto& xn = a.reports[1];
  CHECK(xn.linear.classification == StabilityClassification::SpiralSink);
  CHECK(xn.linear.verdict == StabilityVerdict::Stable);
  CHECK(xn.jacobi.verdict == StabilityVerdict::Stable);
  CHECK(xn.jacobi.deviation_curvature == doctest::Approx(-23.0 / 36.0));
  CHECK(xn.lyapunov.verdict == StabilityVerdict::AsymptoticallyStable);
}

TEST_CASE("analyze n = 2") {
  const auto a = analyze(PolytropeConfig{2.0});
  REQUIRE(a.reports.size() == 2);
  const auto& x0 = a.reports[0];
  CHECK(x0.linear.verdict == StabilityVerdict::Stable);
  CHECK(x0.jacobi.verdict == StabilityVerdict::Unstable);
  CHECK(x0.jacobi.deviation_curvature == 0.25);
  CHECK(x0.lyapunov.verdict == StabilityVerdict::AsymptoticallyStable);
  const auto& xn = a.reports[1];
  CHECK(xn.point.formal());
  CHECK(xn.linear.verdict == StabilityVerdict::Unstable);
}

TEST_CASE("analyze rejects boundary indices") {
  for (double n : {3.0, critical_index_nstar(), 5.0}) {
    CHECK_THROWS_AS(analyze(PolytropeConfig{n}), BoundaryIndex);
  }
  try {
    analyze(PolytropeConfig{5.0});
  } catch (const BoundaryIndex& e) {
    CHECK(e.boundary() == 5.0);
    CHECK(std::strstr(e.what(), "regime boundary n = 5") != nullptr);
  }
}

TEST_CASE("default table matches the reference verdicts") {
  const auto t = build_table();
  REQUIRE(t.rows.size() == 4);
  const char* expected[4][3] = {{"unstable", "unstable", "inconclusive"},
                                {"stable", "unstable", "stable"},
                                {"stable", "stable", "stable"},
                                {"unstable", "stable", "inconclusive"}};
  for (int i = 0; i < 4; ++i) {
    CAPTURE(i);
    CHECK(table_word(t.rows[i].nontrivial.linear) == expected[i][0]);
    CHECK(table_word(t.rows[i].nontrivial.jacobi) == expected[i][1]);
    CHECK(table_word(t.rows[i].nontrivial.lyapunov) == expected[i][2]);
    CHECK(t.rows[i].consistent);
  }
  // X0 column: stable / unstable / stable on 1 < n < 3
  CHECK(table_word(t.rows[0].origin.linear) == "stable");
  CHECK(table_word(t.rows[0].origin.jacobi) == "unstable");
  CHECK(table_word(t.rows[0].origin.lyapunov) == "stable");
  CHECK_FALSE(t.notes.empty());
}

TEST_CASE("regime sweep gives constant verdicts") {
  const auto samples = regime_samples(25);
  for (const auto& s : samples) CHECK(s.size() == 25);
  CHECK(samples[3].back() == 10.0);
  for (const auto& s : samples) {
    for (double n : s) CHECK_FALSE(nearest_boundary(n));
  }
  const auto dense = build_table(25);
  const auto ref = build_table(1);
  for (int i = 0; i < 4; ++i) {
    CHECK(dense.rows[i].consistent);
    CHECK(dense.rows[i].nontrivial == ref.rows[i].nontrivial);
    CHECK(dense.rows[i].origin == ref.rows[i].origin);
  }
  CHECK_THROWS_AS(regime_samples(0), InvalidArgument);
}

TEST_CASE("table output is deterministic") {
  CHECK(io::to_text(build_table()) == io::to_text(build_table()));
  CHECK(io::dump(io::to_json(build_table())) == io::dump(io::to_json(build_table())));
}

TEST_CASE("analysis json carries the schema and eigen data") {
  const auto j = io::to_json(analyze(PolytropeConfig{4.0}));
  CHECK(j.at("schema") == "polystab/1");
  CHECK(j.at("regime") == "(11+8*sqrt(2))/7 < n < 5");
  const auto& xn = j.at("points").at(1);
  CHECK(xn.at("kind") == "Xn");
  CHECK(xn.at("linear").at("classification") == "SpiralSink");
  CHECK(xn.at("linear").at("eigenvalues").at(0).at(1).get<double>() ==
        doctest::Approx(std::sqrt(23.0) / 6.0));
  CHECK(xn.at("jacobi").at("p11").get<double>() == doctest::Approx(-23.0 / 36.0));
  CHECK(xn.at("lyapunov").at("verdict") == "AsymptoticallyStable");

  const auto j2 = io::to_json(analyze(PolytropeConfig{2.0}));
  CHECK(j2.at("points").at(1).at("w0").is_null());
  CHECK(j2.at("points").at(1).at("formal") == true);

  const auto csv = io::to_csv(analyze(PolytropeConfig{4.0}));
  CHECK(csv.rfind("# schema: polystab/1\n", 0) == 0);
}

TEST_CASE("profile json round-trips bit-exactly") {
  for (double n : {1.0, 1.5, 5.0}) {
    const auto p = integrate_physical(n, 12.0, 1e-9);
    const auto text = io::dump(io::to_json(p));
    const auto back = io::profile_from_json(nlohmann::json::parse(text));
    CHECK(back.n == p.n);
    CHECK(back.tol == p.tol);
    CHECK(back.surface == p.surface);
    CHECK(back.truncated == p.truncated);
    CHECK(back.status == p.status);
    REQUIRE(back.points.size() == p.points.size());
    for (std::size_t i = 0; i < p.points.size(); ++i) {
      const auto& a = p.points[i];
      const auto& b = back.points[i];
      CHECK(std::memcmp(&a.xi, &b.xi, sizeof(double)) == 0);
      CHECK(std::memcmp(&a.theta, &b.theta, sizeof(double)) == 0);
      CHECK(std::memcmp(&a.dtheta, &b.dtheta, sizeof(double)) == 0);
      CHECK(std::memcmp(&a.p11, &b.p11, sizeof(double)) == 0);
      REQUIRE(a.milne.has_value() == b.milne.has_value());
      if (a.milne) {
        CHECK(a.milne->u == b.milne->u);
        CHECK(a.milne->v == b.milne->v);
      }
    }
  }
}

TEST_CASE("profile csv layout") {
  const auto csv = io::to_csv(integrate_physical(5.0, 50.0, 1e-8));
  CHECK(csv.rfind("# schema: polystab/1\n", 0) == 0);
  CHECK(csv.find("\nxi,theta,dtheta,u,v,p11\n") != std::string::npos);
  CHECK(csv.find("# truncated: true\n") != std::string::npos);
  CHECK(csv.find("# surface: none\n") != std::string::npos);
  // 17 significant digits re-parse to the same double
  const auto p = integrate_physical(1.0, 50.0, 1e-8);
  const auto text = io::to_csv(p);
  const auto pos = text.find("# surface: ");
  const double parsed = std::stod(text.substr(pos + 11));
  CHECK(parsed == *p.surface);
}

TEST_CASE("phase portraits") {
  SUBCASE("n = 4 contracts") {
    const auto pp = phase_portrait(PolytropeConfig{4.0}, 4, 30.0, 1e-10);
    CHECK(pp.centre.kind == CriticalPointKind::Xn);
    CHECK(pp.trajectories.size() == 16);
    const double w0 = *pp.centre.w0;
    for (const auto& tr : pp.trajectories) {
      const auto& a = tr.states.front();
      const auto& b = tr.states.back();
      CHECK(std::hypot(b.w - w0, b.q) < std::hypot(a.w - w0, a.q));
    }
  }
  SUBCASE("n = 2 falls back to the origin") {
    const auto pp = phase_portrait(PolytropeConfig{2.0}, 3, 5.0, 1e-8);
    CHECK(pp.centre.kind == CriticalPointKind::X0);
    CHECK(pp.trajectories.size() == 9);
    for (const auto& tr : pp.trajectories) CHECK(tr.states.front().w > 0.0);
  }
  SUBCASE("odd grid skips the equilibrium itself") {
    const auto pp = phase_portrait(PolytropeConfig{4.0}, 3, 1.0, 1e-8);
    CHECK(pp.trajectories.size() == 8);
  }
  SUBCASE("serialisation") {
    const auto pp = phase_portrait(PolytropeConfig{4.0}, 2, 1.0, 1e-8);
    const auto j = io::to_json(pp);
    CHECK(j.at("schema") == "polystab/1");
    CHECK(j.at("trajectories").size() == 4);
    CHECK(j.at("trajectories").at(0).at("points").at(0).size() == 3);
    CHECK(io::to_csv(pp).find("trajectory,t,w,q\n") != std::string::npos);
  }
  CHECK_THROWS_AS(phase_portrait(PolytropeConfig{4.0}, 0, 1.0, 1e-8), InvalidArgument);
}
