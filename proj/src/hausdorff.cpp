#include "pmetrics/hausdorff.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "pmetrics/errors.hpp"

namespace pmetrics {

namespace {

void validate(const Matrix& from, const Matrix& to,
              const ProductMetricSpec& metric) {
  if (from.rows() < 1 || to.rows() < 1)
    throw std::invalid_argument("hausdorff: point sets must be nonempty");
  if (from.cols() != to.cols())
    throw DimensionMismatch("hausdorff: point dimensions " +
                            std::to_string(from.cols()) + " vs " +
                            std::to_string(to.cols()));
  if (from.cols() != metric.size())
    throw DimensionMismatch("hausdorff: point dimension " +
                            std::to_string(from.cols()) +
                            " vs metric dimension " +
                            std::to_string(metric.size()));
}

}  // namespace

double directed_hausdorff(const Matrix& from, const Matrix& to,
                          const ProductMetricSpec& metric, double tau) {
  validate(from, to, metric);
  double worst = 0.0;
  for (Index i = 0; i < from.rows(); ++i) {
    double nearest = std::numeric_limits<double>::infinity();
    for (Index j = 0; j < to.rows(); ++j)
      nearest = std::min(nearest,
                         product_distance(metric, from.row(i), to.row(j), tau));
    worst = std::max(worst, nearest);
  }
  return worst;
}

double hausdorff(const Matrix& a, const Matrix& b,
                 const ProductMetricSpec& metric, double tau) {
  return std::max(directed_hausdorff(a, b, metric, tau),
                  directed_hausdorff(b, a, metric, tau));
}

}  // namespace pmetrics
