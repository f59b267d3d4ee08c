#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "pmetrics/axioms.hpp"
#include "pmetrics/exponent.hpp"
#include "pmetrics/types.hpp"

namespace pmetrics {

/// The metric induced by a p-norm: d(x, y) = ||x - y||_p.
DistanceFn metric_from_norm(Exponent p);

struct NormInductionWitness {
  enum class Kind { TranslationInvariance, Homogeneity };

  Kind kind;
  Vector x;
  Vector y;        // translation witnesses only
  Vector z;        // translation offset
  double lambda = 0.0;  // homogeneity witnesses only
  double lhs = 0.0;
  double rhs = 0.0;
  double magnitude = 0.0;
};

struct NormInductionResult {
  bool is_norm_induced = false;
  /// x -> d(x, 0); populated only on success.
  ScalarFieldFn gauge;
  std::optional<NormInductionWitness> witness;
};

/**
 * Tests whether a metric is induced by a norm: translation invariance
 * d(x + z, y + z) = d(x, y) and homogeneity d(lambda x, 0) = |lambda| d(x, 0),
 * sampled. Deterministic homogeneity probes (lambda in {4, 2, -3, 1/2} on the
 * axis vectors) run first. On success the induced gauge x -> d(x, 0) is
 * returned; on failure, the worst witness found.
 *
 * The caller asserts d is a metric; run check_metric_axioms separately.
 */
NormInductionResult norm_candidate_from_metric(const DistanceFn& d, Index dim,
                                               Index trials, double tol,
                                               std::uint64_t seed);

}  // namespace pmetrics
