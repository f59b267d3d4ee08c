#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "pmetrics/axioms.hpp"
#include "pmetrics/types.hpp"

namespace pmetrics {

struct ConvexityWitness {
  Vector x;
  Vector y;
  double t = 0.0;
  double chord_value = 0.0;     // f(t x + (1 - t) y)
  double chord_bound = 0.0;     // t f(x) + (1 - t) f(y)
  double magnitude = 0.0;       // chord_value - chord_bound
  bool nonfinite = false;       // f returned a non-finite value
};

/**
 * Searches for a violation of f(t x + (1-t) y) <= t f(x) + (1-t) f(y).
 *
 * A fixed list of axis-pair midpoints (x = e_i, y = e_j, t = 1/2) is
 * evaluated before any random trial, so the classic sub-one-exponent
 * violations are found independently of the seed; random chords over the box
 * follow. Returns the worst violating triple found, or nullopt.
 */
std::optional<ConvexityWitness> check_convexity(const ScalarFieldFn& f,
                                                Index dim, SampleBox box,
                                                Index trials, double tol,
                                                std::uint64_t seed);

struct HomogeneityWitness {
  Vector x;
  double lambda = 0.0;
  double scaled_value = 0.0;    // f(lambda x)
  double expected_value = 0.0;  // |lambda| f(x)
  double magnitude = 0.0;       // |scaled_value - expected_value|
  bool nonfinite = false;
};

/**
 * Searches for a violation of positive homogeneity f(lambda x) = |lambda| f(x).
 * Deterministic probes (lambda in {4, -3, 1/2} against the axis vectors) run
 * before random sampling of x in [-2, 2]^dim and lambda in [-4, 4].
 */
std::optional<HomogeneityWitness> check_homogeneity(const ScalarFieldFn& f,
                                                    Index dim, Index trials,
                                                    double tol,
                                                    std::uint64_t seed);

}  // namespace pmetrics
