#pragma once

#include "pmetrics/product_metric.hpp"
#include "pmetrics/types.hpp"

namespace pmetrics {

// Finite point sets are matrices with one point per row; both sets must be
// nonempty and share the metric's dimension.

/// max over rows of `from` of the distance to the nearest row of `to`,
/// by exhaustive pairwise evaluation.
double directed_hausdorff(const Matrix& from, const Matrix& to,
                          const ProductMetricSpec& metric,
                          double tau = kDefaultTau);

/// Hausdorff distance: the larger of the two directed values. Symmetric by
/// construction.
double hausdorff(const Matrix& a, const Matrix& b,
                 const ProductMetricSpec& metric, double tau = kDefaultTau);

}  // namespace pmetrics
