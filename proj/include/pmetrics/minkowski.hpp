#pragma once

#include <functional>

#include "pmetrics/types.hpp"

namespace pmetrics {

/// A convex, symmetric (K = -K), open body, described by a membership
/// predicate plus Euclidean radii with S(0, r) inside K inside S(0, R). The
/// caller asserts convexity and symmetry; the radii are contract inputs, not
/// derived.
struct ConvexBodyOracle {
  std::function<bool(const Vector&)> contains;
  double inner_radius = 0.0;  // r
  double outer_radius = 0.0;  // R
};

/**
 * Minkowski functional ||x||_K = inf{lambda > 0 : x in lambda K}, by
 * bisection on lambda inside the bracket [||x||_2 / R, ||x||_2 / r] to
 * absolute tolerance tol (200-iteration cap). Returns 0 for x = 0.
 *
 * The infimum is the same for open and closed K; only boundary attainment
 * differs. Oracle answers inconsistent with the declared radii raise
 * OracleContractError.
 */
double minkowski_functional(const ConvexBodyOracle& body, const Vector& x,
                            double tol);

}  // namespace pmetrics
