#include <doctest.h>

#include <random>

#include "pmetrics/scalar_metric.hpp"

using namespace pmetrics;

TEST_SUITE("scalar_metric") {

TEST_CASE("discrete distance is 0 on equal points and 1 otherwise") {
  const auto disc = ScalarMetric::discrete();
  CHECK(scalar_distance(disc, 1.0, 1.0) == 0.0);
  CHECK(scalar_distance(disc, 1.0, 2.0) == 1.0);
  CHECK(scalar_distance(disc, -0.5, 0.5) == 1.0);
}

TEST_CASE("discrete equality respects the tau threshold, inclusive") {
  const auto disc = ScalarMetric::discrete();
  CHECK(scalar_distance(disc, 0.0, 1e-9) == 0.0);
  CHECK(scalar_distance(disc, 0.0, 1.1e-9) == 1.0);
  CHECK(scalar_distance(disc, 0.0, 0.5, /*tau=*/1.0) == 0.0);
}

TEST_CASE("power distance evaluates |x-y|^s") {
  CHECK(scalar_distance(ScalarMetric::power(0.5), 0.0, 4.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(scalar_distance(ScalarMetric::power(0.5), 4.0, 0.0) == doctest::Approx(2.0).epsilon(1e-15));
  // exact-zero guard: no log(0) blowup
  CHECK(scalar_distance(ScalarMetric::power(0.5), 3.0, 3.0) == 0.0);
}

TEST_CASE("absolute distance") {
  CHECK(scalar_distance(ScalarMetric::absolute(), -3.0, 2.0) == 5.0);
  CHECK(scalar_distance(ScalarMetric::absolute(), 2.0, 2.0) == 0.0);
}

TEST_CASE("power exponent outside (0, 1] is rejected") {
  CHECK_THROWS_AS(ScalarMetric::power(1.5), std::invalid_argument);
  CHECK_THROWS_AS(ScalarMetric::power(0.0), std::invalid_argument);
  CHECK_THROWS_AS(ScalarMetric::power(-0.5), std::invalid_argument);
  CHECK_NOTHROW(ScalarMetric::power(1.0));
  CHECK_NOTHROW(ScalarMetric::power(1e-6));
}

TEST_CASE("power(1) agrees with absolute exactly on random pairs") {
  const auto p1 = ScalarMetric::power(1.0);
  const auto abs = ScalarMetric::absolute();
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> coord(-100.0, 100.0);
  for (int i = 0; i < 10000; ++i) {
    const double x = coord(rng);
    const double y = coord(rng);
    CHECK(scalar_distance(p1, x, y) == scalar_distance(abs, x, y));
  }
}

TEST_CASE("symmetry and identity hold for every kind") {
  const ScalarMetric kinds[] = {ScalarMetric::absolute(),
                                ScalarMetric::power(0.5),
                                ScalarMetric::power(0.25),
                                ScalarMetric::discrete()};
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coord(-10.0, 10.0);
  for (const auto& kind : kinds) {
    for (int i = 0; i < 1000; ++i) {
      const double x = coord(rng);
      const double y = coord(rng);
      CHECK(scalar_distance(kind, x, y) == scalar_distance(kind, y, x));
      CHECK(scalar_distance(kind, x, x) == 0.0);
      if (x != y) CHECK(scalar_distance(kind, x, y) > 0.0);
    }
  }
}

}  // TEST_SUITE
