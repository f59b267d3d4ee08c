#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "pmetrics/convexity.hpp"
#include "pmetrics/errors.hpp"
#include "pmetrics/gauges.hpp"
#include "pmetrics/minkowski.hpp"
#include "pmetrics/norm_bridge.hpp"
#include "pmetrics/product_metric.hpp"

using namespace pmetrics;

namespace {

Vector vec2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

Vector vec3(double a, double b, double c) {
  Vector v(3);
  v << a, b, c;
  return v;
}

ScalarFieldFn gauge_fn(const GaugeSpec& spec) {
  return [spec](const Vector& x) { return gauge_value(spec, x); };
}

ConvexBodyOracle open_pball(double p_raw, Index dim) {
  const Exponent p = std::isinf(p_raw) ? Exponent::infinity() : Exponent(p_raw);
  const double n = static_cast<double>(dim);
  const double inv_p = p.is_infinity() ? 0.0 : 1.0 / p.value();
  const double ratio = std::pow(n, 0.5 - inv_p);  // ||.||_2 / ||.||_p extremes
  return {[p](const Vector& v) { return p_norm(v, p) < 1.0; },
          std::min(1.0, ratio), std::max(1.0, ratio)};
}

}  // namespace

TEST_SUITE("norms_convexity") {

TEST_CASE("p_norm examples") {
  CHECK(p_norm(vec2(3, 4), 2.0) == 5.0);
  CHECK(p_norm(vec3(1, -2, 3), 1.0) == 6.0);
  CHECK(p_norm(vec3(1, -2, 3), Exponent::infinity()) == 3.0);
  CHECK_THROWS_AS(p_norm(vec2(1, 1), 0.5), std::invalid_argument);
}

TEST_CASE("gauge examples") {
  CHECK(gauge_value(GaugeSpec::root_power_sum(0.5), vec2(1, 0)) == 1.0);
  CHECK(gauge_value(GaugeSpec::root_power_sum(0.5), vec2(0.5, 0.5)) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(gauge_value(GaugeSpec::power_sum(0.5), vec2(4, 9)) ==
        doctest::Approx(5.0).epsilon(1e-15));
  CHECK_THROWS_AS(GaugeSpec::power_sum(0.0), std::invalid_argument);
  CHECK_THROWS_AS(GaugeSpec::root_power_sum(-1.0), std::invalid_argument);
}

TEST_CASE("gauges with exponent >= 1 survive convexity falsification") {
  for (double p : {1.0, 2.0}) {
    const auto witness = check_convexity(gauge_fn(GaugeSpec::root_power_sum(p)),
                                         2, {-1.0, 1.0}, 10000, 1e-9, 41);
    CHECK_FALSE(witness.has_value());
  }
  const auto witness = check_convexity(gauge_fn(GaugeSpec::power_sum(2.0)), 2,
                                       {-1.0, 1.0}, 5000, 1e-9, 42);
  CHECK_FALSE(witness.has_value());
}

TEST_CASE("sub-one exponents fail convexity at the axis midpoint") {
  const auto f_witness = check_convexity(gauge_fn(GaugeSpec::root_power_sum(0.5)),
                                         2, {-1.0, 1.0}, 1000, 1e-9, 43);
  REQUIRE(f_witness.has_value());
  CHECK_FALSE(f_witness->nonfinite);
  CHECK(f_witness->t == 0.5);
  CHECK(f_witness->magnitude == doctest::Approx(1.0).epsilon(1e-12));

  const auto g_witness = check_convexity(gauge_fn(GaugeSpec::power_sum(0.5)), 2,
                                         {-1.0, 1.0}, 1000, 1e-9, 44);
  REQUIRE(g_witness.has_value());
  CHECK(g_witness->magnitude ==
        doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-12));
}

TEST_CASE("convexity violations replay from their witnesses") {
  for (double p : {0.25, 0.5, 0.75}) {
    const auto spec = GaugeSpec::root_power_sum(p);
    const auto witness =
        check_convexity(gauge_fn(spec), 3, {-1.0, 1.0}, 1000, 1e-9, 45);
    REQUIRE(witness.has_value());
    const Vector chord_point =
        witness->t * witness->x + (1.0 - witness->t) * witness->y;
    const double replay = gauge_value(spec, chord_point) -
                          (witness->t * gauge_value(spec, witness->x) +
                           (1.0 - witness->t) * gauge_value(spec, witness->y));
    CHECK(replay > 1e-9);
    CHECK(replay == doctest::Approx(witness->magnitude).epsilon(1e-12));
  }
}

TEST_CASE("non-finite field values surface as their own witness class") {
  const ScalarFieldFn bad = [](const Vector& x) {
    return x(0) > 0.5 ? std::numeric_limits<double>::infinity() : x.norm();
  };
  const auto witness = check_convexity(bad, 2, {-1.0, 1.0}, 1000, 1e-9, 46);
  REQUIRE(witness.has_value());
  CHECK(witness->nonfinite);
}

TEST_CASE("homogeneity holds for root-power-sum gauges of any exponent") {
  for (double p : {0.25, 0.5, 1.0, 2.0, 4.0}) {
    const auto witness = check_homogeneity(gauge_fn(GaugeSpec::root_power_sum(p)),
                                           2, 5000, 1e-9, 47);
    CHECK_FALSE(witness.has_value());
  }
}

TEST_CASE("power-sum gauges are homogeneous only at exponent 1") {
  const auto witness =
      check_homogeneity(gauge_fn(GaugeSpec::power_sum(0.5)), 2, 1000, 1e-9, 48);
  REQUIRE(witness.has_value());
  // the lambda = 4 axis probe: g(4 e_1) = 2 against 4 g(e_1) = 4
  CHECK(witness->lambda == 4.0);
  CHECK(witness->magnitude == doctest::Approx(2.0).epsilon(1e-12));

  const auto at_one =
      check_homogeneity(gauge_fn(GaugeSpec::power_sum(1.0)), 2, 5000, 1e-9, 49);
  CHECK_FALSE(at_one.has_value());
}

TEST_CASE("metric_from_norm evaluates and obeys the axioms") {
  const auto d2 = metric_from_norm(2.0);
  CHECK(d2(vec2(0, 0), vec2(3, 4)) == 5.0);
  const auto d1 = metric_from_norm(1.0);
  CHECK(d1(vec2(0.3, -0.7), vec2(0.3, -0.7)) == 0.0);
  const auto dinf = metric_from_norm(Exponent::infinity());
  CHECK(dinf(vec2(1, 1), vec2(2, 3)) == 2.0);

  for (const Exponent p : {Exponent(1.0), Exponent(2.0), Exponent::infinity()}) {
    const auto report =
        check_metric_axioms(metric_from_norm(p), 3, {-5.0, 5.0}, 2000, 1e-12, 50);
    CHECK_FALSE(report.falsified());
  }
}

TEST_CASE("taxicab metric is recognized as norm-induced") {
  const auto result =
      norm_candidate_from_metric(metric_from_norm(1.0), 3, 2000, 1e-9, 51);
  REQUIRE(result.is_norm_induced);
  REQUIRE(result.gauge);
  std::mt19937_64 rng(52);
  std::uniform_real_distribution<double> coord(-5.0, 5.0);
  for (int i = 0; i < 200; ++i) {
    const Vector x = vec3(coord(rng), coord(rng), coord(rng));
    CHECK(result.gauge(x) == doctest::Approx(p_norm(x, 1.0)).epsilon(1e-12));
  }
}

TEST_CASE("the power-sum metric is not norm-induced: homogeneity fails") {
  const DistanceFn ds_half = [](const Vector& x, const Vector& y) {
    return ds_distance(0.5, x, y);
  };
  const auto result = norm_candidate_from_metric(ds_half, 2, 500, 1e-9, 53);
  REQUIRE_FALSE(result.is_norm_induced);
  REQUIRE(result.witness.has_value());
  CHECK(result.witness->kind == NormInductionWitness::Kind::Homogeneity);
  // worst deterministic probe: d(4 e_i, 0) = 2 against 4 d(e_i, 0) = 4
  CHECK(result.witness->lambda == 4.0);
  CHECK(result.witness->lhs == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(result.witness->rhs == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("the support metric is not norm-induced: counting ignores scale") {
  const DistanceFn d0 = [](const Vector& x, const Vector& y) {
    return static_cast<double>(support_distance(x, y));
  };
  const auto result = norm_candidate_from_metric(d0, 2, 500, 1e-9, 54);
  REQUIRE_FALSE(result.is_norm_induced);
  REQUIRE(result.witness.has_value());
  CHECK(result.witness->kind == NormInductionWitness::Kind::Homogeneity);
}

TEST_CASE("translation-variant metrics are caught by the random probes") {
  // Homogeneous by construction, but not translation invariant.
  const DistanceFn skewed = [](const Vector& x, const Vector& y) {
    return (x - y).norm() + 0.1 * std::abs(x.norm() - y.norm());
  };
  const auto result = norm_candidate_from_metric(skewed, 2, 2000, 1e-9, 55);
  REQUIRE_FALSE(result.is_norm_induced);
  REQUIRE(result.witness.has_value());
  CHECK(result.witness->kind ==
        NormInductionWitness::Kind::TranslationInvariance);
}

TEST_CASE("minkowski functional of the unit box doubles at (2, 0)") {
  const auto box = open_pball(std::numeric_limits<double>::infinity(), 2);
  CHECK(minkowski_functional(box, vec2(2, 0), 1e-8) ==
        doctest::Approx(2.0).epsilon(1e-7));
  CHECK(minkowski_functional(box, Vector::Zero(2), 1e-8) == 0.0);
}

TEST_CASE("minkowski functional of the cross-polytope matches the 1-norm") {
  const auto diamond = open_pball(1.0, 2);
  CHECK(std::abs(minkowski_functional(diamond, vec2(1, 1), 1e-8) - 2.0) <= 2e-8);
}

TEST_CASE("minkowski functional agrees with p-norms on random points") {
  std::mt19937_64 rng(56);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  const double tol = 1e-7;
  for (Index dim : {Index(2), Index(5)}) {
    for (double p : {1.0, 2.0, std::numeric_limits<double>::infinity()}) {
      const auto body = open_pball(p, dim);
      const Exponent pe = std::isinf(p) ? Exponent::infinity() : Exponent(p);
      for (int i = 0; i < 100; ++i) {
        Vector x(dim);
        for (Index j = 0; j < dim; ++j) x(j) = coord(rng);
        const double expected = p_norm(x, pe);
        CHECK(std::abs(minkowski_functional(body, x, tol) - expected) <= 2 * tol);
      }
    }
  }
}

TEST_CASE("an oracle inconsistent with its radii is rejected") {
  // Claims inner radius 1 but only contains the ball of radius 0.4.
  const ConvexBodyOracle liar{
      [](const Vector& v) { return v.norm() < 0.4; }, 1.0, 2.0};
  CHECK_THROWS_AS(minkowski_functional(liar, vec2(1, 1), 1e-8),
                  OracleContractError);
  CHECK_THROWS_AS(minkowski_functional({nullptr, 1.0, 2.0}, vec2(1, 0), 1e-8),
                  std::invalid_argument);
  const ConvexBodyOracle bad_radii{
      [](const Vector& v) { return v.norm() < 1.0; }, 2.0, 1.0};
  CHECK_THROWS_AS(minkowski_functional(bad_radii, vec2(1, 0), 1e-8),
                  std::invalid_argument);
}

}  // TEST_SUITE
