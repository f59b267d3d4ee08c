#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "pmetrics/types.hpp"

namespace pmetrics {

/// Base distance on the real line: |x-y|, |x-y|^s with 0 < s <= 1, or the
/// 0/1 discrete distance. Exponents outside (0, 1] are rejected at
/// construction; |x-y|^s with s > 1 fails the triangle inequality and is not
/// a metric.
class ScalarMetric {
 public:
  enum class Kind { Absolute, Power, Discrete };

  static ScalarMetric absolute() { return {Kind::Absolute, 1.0}; }
  static ScalarMetric discrete() { return {Kind::Discrete, 0.0}; }
  static ScalarMetric power(double exponent) {
    if (!(exponent > 0.0 && exponent <= 1.0))
      throw std::invalid_argument(
          "power metric exponent must lie in (0, 1], got " +
          std::to_string(exponent));
    return {Kind::Power, exponent};
  }

  Kind kind() const { return kind_; }

  /// Exponent s of the power kind; 1 for absolute, unused for discrete.
  double exponent() const { return exponent_; }

 private:
  ScalarMetric(Kind kind, double exponent) : kind_(kind), exponent_(exponent) {}

  Kind kind_;
  double exponent_;
};

namespace detail {

// |t|^s with the zero case split off, so s*log|t| never sees log(0).
// s == 1 returns |t| unchanged; Power(1) and Absolute agree bit for bit.
inline double abs_power(double t, double s) {
  t = std::abs(t);
  if (t == 0.0) return 0.0;
  if (s == 1.0) return t;
  return std::exp(s * std::log(t));
}

}  // namespace detail

/// Distance between two reals under the given base metric. Total over the
/// reals. The discrete kind treats |x-y| <= tau as equality.
inline double scalar_distance(const ScalarMetric& metric, double x, double y,
                              double tau = kDefaultTau) {
  switch (metric.kind()) {
    case ScalarMetric::Kind::Absolute:
      return std::abs(x - y);
    case ScalarMetric::Kind::Power:
      return detail::abs_power(x - y, metric.exponent());
    case ScalarMetric::Kind::Discrete:
      return std::abs(x - y) <= tau ? 0.0 : 1.0;
  }
  return 0.0;  // unreachable
}

}  // namespace pmetrics
