#include <doctest.h>

#include <random>

#include "pmetrics/hausdorff.hpp"

using namespace pmetrics;

namespace {

Matrix points1d(std::initializer_list<double> values) {
  Matrix m(static_cast<Index>(values.size()), 1);
  Index i = 0;
  for (double v : values) m(i++, 0) = v;
  return m;
}

Matrix random_set(std::mt19937_64& rng, Index max_points, Index dim) {
  std::uniform_real_distribution<double> coord(-5.0, 5.0);
  const Index n = 1 + static_cast<Index>(rng() % static_cast<std::uint64_t>(max_points));
  Matrix m(n, dim);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < dim; ++j) m(i, j) = coord(rng);
  return m;
}

}  // namespace

TEST_SUITE("hausdorff") {

TEST_CASE("directed distances on the line") {
  const auto line = ProductMetricSpec::manhattan(1);
  CHECK(directed_hausdorff(points1d({0, 1}), points1d({2}), line) == 2.0);
  CHECK(directed_hausdorff(points1d({2}), points1d({0, 1}), line) == 1.0);
  CHECK(directed_hausdorff(points1d({0, 1}), points1d({0, 1}), line) == 0.0);
}

TEST_CASE("hausdorff distance examples") {
  const auto line = ProductMetricSpec::manhattan(1);
  CHECK(hausdorff(points1d({0, 1}), points1d({2}), line) == 2.0);

  Matrix a(1, 2), b(1, 2);
  a << 0, 0;
  b << 3, 4;
  CHECK(hausdorff(a, b, ProductMetricSpec::euclidean(2)) == 5.0);

  const Matrix k = points1d({-1, 0.5, 2});
  CHECK(hausdorff(k, k, line) == 0.0);
}

TEST_CASE("hausdorff is exactly symmetric") {
  std::mt19937_64 rng(61);
  const auto metric = ProductMetricSpec::euclidean(2);
  for (int i = 0; i < 200; ++i) {
    const Matrix a = random_set(rng, 8, 2);
    const Matrix b = random_set(rng, 8, 2);
    CHECK(hausdorff(a, b, metric) == hausdorff(b, a, metric));
  }
}

TEST_CASE("hausdorff vanishes exactly on equal sets, and only there") {
  const auto metric = ProductMetricSpec::euclidean(2);
  Matrix a(3, 2), shuffled(4, 2), other(3, 2);
  a << 0, 0, 1, 2, -1, 3;
  // same set with a repeated row and permuted order
  shuffled << 1, 2, -1, 3, 0, 0, 1, 2;
  other << 0, 0, 1, 2, -1, 3.5;
  CHECK(hausdorff(a, shuffled, metric) == 0.0);
  CHECK(hausdorff(a, other, metric) > 0.0);
}

TEST_CASE("triangle inequality holds over random set triples") {
  std::mt19937_64 rng(62);
  const ProductMetricSpec metrics[] = {
      ProductMetricSpec::euclidean(2),
      ProductMetricSpec::uniform(ScalarMetric::power(0.5), 2, 1.0),
      ProductMetricSpec::uniform(ScalarMetric::absolute(), 2, Exponent::infinity())};
  for (const auto& metric : metrics) {
    for (int i = 0; i < 300; ++i) {
      const Matrix a = random_set(rng, 8, 2);
      const Matrix b = random_set(rng, 8, 2);
      const Matrix c = random_set(rng, 8, 2);
      CHECK(hausdorff(a, c, metric) <=
            hausdorff(a, b, metric) + hausdorff(b, c, metric) + 1e-12);
    }
  }
}

TEST_CASE("dimension and emptiness preconditions") {
  const auto metric = ProductMetricSpec::euclidean(2);
  Matrix planar(1, 2), linear(1, 1), empty(0, 2);
  planar << 0, 0;
  linear << 0;
  CHECK_THROWS_AS(hausdorff(planar, linear, metric), DimensionMismatch);
  CHECK_THROWS_AS(hausdorff(planar, planar, ProductMetricSpec::euclidean(3)),
                  DimensionMismatch);
  CHECK_THROWS_AS(hausdorff(empty, planar, metric), std::invalid_argument);
}

}  // TEST_SUITE
