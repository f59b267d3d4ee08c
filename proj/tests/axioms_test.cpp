#include <doctest.h>

#include <cmath>
#include <limits>

#include "pmetrics/axioms.hpp"
#include "pmetrics/scalar_metric.hpp"

using namespace pmetrics;

namespace {

double abs_diff(const Vector& x, const Vector& y) { return std::abs(x(0) - y(0)); }

double squared_diff(const Vector& x, const Vector& y) {
  const double t = x(0) - y(0);
  return t * t;
}

}  // namespace

TEST_SUITE("metric_axioms") {

TEST_CASE("|x-y| survives falsification") {
  const auto report =
      check_metric_axioms(abs_diff, 1, {-10.0, 10.0}, 10000, 1e-12, 1);
  CHECK(report.trials_run == 10000);
  CHECK_FALSE(report.falsified());
}

TEST_CASE("|x-y|^2 fails the triangle inequality at (0, 1, 2)") {
  // Hand evaluation: d(0,2) = 4 > d(0,1) + d(1,2) = 2.
  Vector x(1), y(1), z(1);
  x << 0.0;
  y << 2.0;
  z << 1.0;
  CHECK(squared_diff(x, y) == 4.0);
  CHECK(squared_diff(x, z) + squared_diff(z, y) == 2.0);

  const auto report =
      check_metric_axioms(squared_diff, 1, {-5.0, 5.0}, 1000, 1e-12, 3);
  REQUIRE(report.falsified());
  bool triangle_found = false;
  for (const auto& violation : report.violations) {
    if (violation.axiom != MetricAxiom::Triangle) continue;
    triangle_found = true;
    // Each witness, re-evaluated, must reproduce the violation.
    const double excess =
        squared_diff(violation.x, violation.y) -
        (squared_diff(violation.x, violation.z) + squared_diff(violation.z, violation.y));
    CHECK(excess > 1e-12);
    CHECK(excess == doctest::Approx(violation.magnitude).epsilon(1e-12));
  }
  CHECK(triangle_found);
}

TEST_CASE("the power-0.5 base metric passes an exhaustive grid check") {
  // Independent oracle: enumerate every triple of the grid {0, 0.5, ..., 5}
  // and verify the axiom inequalities directly.
  const auto metric = ScalarMetric::power(0.5);
  std::vector<double> grid;
  for (int i = 0; i <= 10; ++i) grid.push_back(0.5 * i);
  for (double x : grid) {
    for (double y : grid) {
      const double dxy = scalar_distance(metric, x, y);
      CHECK(dxy >= 0.0);
      CHECK(dxy == scalar_distance(metric, y, x));
      CHECK((dxy == 0.0) == (x == y));
      for (double z : grid) {
        const double detour =
            scalar_distance(metric, x, z) + scalar_distance(metric, z, y);
        CHECK(dxy <= detour + 1e-12);
      }
    }
  }
}

TEST_CASE("non-finite distances are reported as their own class") {
  const DistanceFn bad = [](const Vector& x, const Vector& y) {
    const double t = std::abs(x(0) - y(0));
    return t > 1.0 ? std::numeric_limits<double>::quiet_NaN() : t;
  };
  const auto report = check_metric_axioms(bad, 1, {-5.0, 5.0}, 500, 1e-12, 5);
  REQUIRE(report.falsified());
  bool nonfinite_found = false;
  for (const auto& violation : report.violations)
    if (violation.axiom == MetricAxiom::NonFinite) nonfinite_found = true;
  CHECK(nonfinite_found);
}

TEST_CASE("identical reruns produce identical reports") {
  const auto a = check_metric_axioms(squared_diff, 1, {-5.0, 5.0}, 200, 1e-12, 11);
  const auto b = check_metric_axioms(squared_diff, 1, {-5.0, 5.0}, 200, 1e-12, 11);
  REQUIRE(a.violations.size() == b.violations.size());
  for (std::size_t i = 0; i < a.violations.size(); ++i) {
    CHECK(a.violations[i].magnitude == b.violations[i].magnitude);
    CHECK(a.violations[i].x == b.violations[i].x);
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(check_metric_axioms(abs_diff, 1, {-1.0, 1.0}, 0, 1e-12, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_metric_axioms(abs_diff, 0, {-1.0, 1.0}, 10, 1e-12, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_metric_axioms(abs_diff, 1, {2.0, 2.0}, 10, 1e-12, 0),
                  std::invalid_argument);
}

}  // TEST_SUITE
