#include "pmetrics/convexity.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace pmetrics {

namespace {

bool worse(double candidate, const std::optional<double>& incumbent) {
  return !incumbent || candidate > *incumbent;
}

}  // namespace

std::optional<ConvexityWitness> check_convexity(const ScalarFieldFn& f,
                                                Index dim, SampleBox box,
                                                Index trials, double tol,
                                                std::uint64_t seed) {
  if (!f) throw std::invalid_argument("check_convexity: null function");
  if (dim < 1) throw std::invalid_argument("check_convexity: dim must be >= 1");
  if (trials < 1) throw std::invalid_argument("check_convexity: trials must be >= 1");
  if (!(box.lo < box.hi)) throw std::invalid_argument("check_convexity: empty sampling box");

  std::optional<ConvexityWitness> worst;
  std::optional<double> worst_magnitude;

  const auto probe = [&](const Vector& x, const Vector& y, double t) -> bool {
    const double fx = f(x);
    const double fy = f(y);
    const double chord_value = f(t * x + (1.0 - t) * y);
    if (!std::isfinite(fx) || !std::isfinite(fy) || !std::isfinite(chord_value)) {
      worst = ConvexityWitness{x, y, t, chord_value, t * fx + (1.0 - t) * fy,
                               0.0, true};
      return true;  // non-finite ends the search
    }
    const double chord_bound = t * fx + (1.0 - t) * fy;
    const double magnitude = chord_value - chord_bound;
    if (magnitude > tol && worse(magnitude, worst_magnitude)) {
      worst = ConvexityWitness{x, y, t, chord_value, chord_bound, magnitude, false};
      worst_magnitude = magnitude;
    }
    return false;
  };

  // Axis-pair midpoints first: for the sub-one-exponent gauges these are
  // guaranteed violations, independent of box and seed.
  for (Index i = 0; i < dim; ++i) {
    for (Index j = i + 1; j < dim; ++j) {
      Vector x = Vector::Zero(dim);
      Vector y = Vector::Zero(dim);
      x(i) = 1.0;
      y(j) = 1.0;
      if (probe(x, y, 0.5)) return worst;
    }
  }
  if (worst) return worst;

  Vector x(dim), y(dim);
  for (Index trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng(subseed(seed, static_cast<std::uint64_t>(trial)));
    std::uniform_real_distribution<double> coord(box.lo, box.hi);
    std::uniform_real_distribution<double> weight(0.0, 1.0);
    for (Index i = 0; i < dim; ++i) x(i) = coord(rng);
    for (Index i = 0; i < dim; ++i) y(i) = coord(rng);
    if (probe(x, y, weight(rng))) return worst;
  }
  return worst;
}

std::optional<HomogeneityWitness> check_homogeneity(const ScalarFieldFn& f,
                                                    Index dim, Index trials,
                                                    double tol,
                                                    std::uint64_t seed) {
  if (!f) throw std::invalid_argument("check_homogeneity: null function");
  if (dim < 1) throw std::invalid_argument("check_homogeneity: dim must be >= 1");
  if (trials < 1) throw std::invalid_argument("check_homogeneity: trials must be >= 1");

  std::optional<HomogeneityWitness> worst;
  std::optional<double> worst_magnitude;

  const auto probe = [&](const Vector& x, double lambda) -> bool {
    const double fx = f(x);
    const double scaled_value = f(lambda * x);
    if (!std::isfinite(fx) || !std::isfinite(scaled_value)) {
      worst = HomogeneityWitness{x, lambda, scaled_value, std::abs(lambda) * fx,
                                 0.0, true};
      return true;
    }
    const double expected = std::abs(lambda) * fx;
    const double magnitude = std::abs(scaled_value - expected);
    if (magnitude > tol && worse(magnitude, worst_magnitude)) {
      worst = HomogeneityWitness{x, lambda, scaled_value, expected, magnitude, false};
      worst_magnitude = magnitude;
    }
    return false;
  };

  for (double lambda : {4.0, -3.0, 0.5}) {
    for (Index i = 0; i < dim; ++i) {
      Vector axis = Vector::Zero(dim);
      axis(i) = 1.0;
      if (probe(axis, lambda)) return worst;
    }
  }
  if (worst) return worst;

  Vector x(dim);
  for (Index trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng(subseed(seed, static_cast<std::uint64_t>(trial)));
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    std::uniform_real_distribution<double> scale(-4.0, 4.0);
    for (Index i = 0; i < dim; ++i) x(i) = coord(rng);
    if (probe(x, scale(rng))) return worst;
  }
  return worst;
}

}  // namespace pmetrics
