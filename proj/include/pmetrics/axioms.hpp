#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pmetrics/types.hpp"

namespace pmetrics {

using DistanceFn = std::function<double(const Vector&, const Vector&)>;
using ScalarFieldFn = std::function<double(const Vector&)>;

/// Axis-aligned cube [lo, hi]^dim sampled uniformly per coordinate.
struct SampleBox {
  double lo = -1.0;
  double hi = 1.0;
};

enum class MetricAxiom { Nonnegativity, Identity, Symmetry, Triangle, NonFinite };

const char* metric_axiom_name(MetricAxiom axiom);

struct AxiomViolation {
  MetricAxiom axiom;
  Vector x;
  Vector y;
  Vector z;          // only triangle witnesses carry a third point
  double magnitude;  // amount by which the axiom fails, beyond tolerance
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  Index trials_run = 0;

  bool falsified() const { return !violations.empty(); }
};

/**
 * Random-search falsifier for the metric axioms of a distance function on
 * [box]^dim. Draws `trials` triples (x, y, z), each from its own subseeded
 * stream, and records every violation of nonnegativity, identity of
 * indiscernibles, symmetry, or the triangle inequality beyond `tol`.
 * Non-finite distance values are reported as a distinct violation class.
 * Points within `tau` per coordinate count as equal for the indiscernibles
 * check; pass the same tau the metric uses.
 *
 * An empty report does not prove the axioms; it records a failure to
 * falsify them.
 */
AxiomReport check_metric_axioms(const DistanceFn& d, Index dim, SampleBox box,
                                Index trials, double tol, std::uint64_t seed,
                                double tau = kDefaultTau);

}  // namespace pmetrics
