#include "pmetrics/norm_bridge.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "pmetrics/errors.hpp"
#include "pmetrics/gauges.hpp"

namespace pmetrics {

DistanceFn metric_from_norm(Exponent p) {
  return [p](const Vector& x, const Vector& y) {
    if (x.size() != y.size())
      throw DimensionMismatch("metric_from_norm: dimensions " +
                              std::to_string(x.size()) + " vs " +
                              std::to_string(y.size()));
    return p_norm(x - y, p);
  };
}

namespace {

Vector axis_vector(Index dim, Index i) {
  Vector e = Vector::Zero(dim);
  e(i) = 1.0;
  return e;
}

}  // namespace

NormInductionResult norm_candidate_from_metric(const DistanceFn& d, Index dim,
                                               Index trials, double tol,
                                               std::uint64_t seed) {
  if (!d) throw std::invalid_argument("norm_candidate_from_metric: null metric");
  if (dim < 1) throw std::invalid_argument("norm_candidate_from_metric: dim must be >= 1");
  if (trials < 1) throw std::invalid_argument("norm_candidate_from_metric: trials must be >= 1");

  const Vector origin = Vector::Zero(dim);
  NormInductionResult result;
  std::optional<double> worst_magnitude;

  const auto record = [&](NormInductionWitness w) {
    if (!worst_magnitude || w.magnitude > *worst_magnitude) {
      worst_magnitude = w.magnitude;
      result.witness = std::move(w);
    }
  };

  const auto probe_homogeneity = [&](const Vector& x, double lambda) {
    const double lhs = d(lambda * x, origin);
    const double rhs = std::abs(lambda) * d(x, origin);
    const double magnitude = std::abs(lhs - rhs);
    if (magnitude > tol)
      record({NormInductionWitness::Kind::Homogeneity, x, Vector(), Vector(),
              lambda, lhs, rhs, magnitude});
  };

  const auto probe_translation = [&](const Vector& x, const Vector& y,
                                     const Vector& z) {
    const double lhs = d(x + z, y + z);
    const double rhs = d(x, y);
    const double magnitude = std::abs(lhs - rhs);
    if (magnitude > tol)
      record({NormInductionWitness::Kind::TranslationInvariance, x, y, z, 0.0,
              lhs, rhs, magnitude});
  };

  // Deterministic scaling probes catch the power-sum and support metrics at
  // the same witnesses every run.
  for (double lambda : {4.0, 2.0, -3.0, 0.5})
    for (Index i = 0; i < dim; ++i) probe_homogeneity(axis_vector(dim, i), lambda);
  if (result.witness) return result;

  Vector x(dim), y(dim), z(dim);
  for (Index trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng(subseed(seed, static_cast<std::uint64_t>(trial)));
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    std::uniform_real_distribution<double> scale(-4.0, 4.0);
    for (Index i = 0; i < dim; ++i) x(i) = coord(rng);
    for (Index i = 0; i < dim; ++i) y(i) = coord(rng);
    for (Index i = 0; i < dim; ++i) z(i) = coord(rng);
    probe_translation(x, y, z);
    probe_homogeneity(x, scale(rng));
  }

  if (result.witness) return result;

  result.is_norm_induced = true;
  result.gauge = [d, origin](const Vector& v) { return d(v, origin); };
  return result;
}

}  // namespace pmetrics
