#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "pmetrics/exponent.hpp"
#include "pmetrics/types.hpp"

namespace pmetrics {

/// p-norm of a vector: (sum |x_i|^p)^(1/p), or max |x_i| at p = infinity.
/// Exponent construction already rejects p < 1; for sub-one exponents use
/// gauge_value, which makes no norm claim.
template <typename Derived>
double p_norm(const Eigen::MatrixBase<Derived>& x, Exponent p) {
  if (x.size() == 0) return 0.0;
  if (p.is_infinity()) return x.derived().cwiseAbs().maxCoeff();
  const double pv = p.value();
  if (pv == 1.0) return x.derived().cwiseAbs().sum();
  if (pv == 2.0) return x.norm();
  double acc = 0.0;
  for (Index i = 0; i < x.size(); ++i)
    acc += std::pow(std::abs(static_cast<double>(x(i))), pv);
  return std::pow(acc, 1.0 / pv);
}

/// The two optimization-gauge families, defined for any exponent > 0:
///   RootPowerSum  (sum |x_i|^p)^(1/p)   homogeneous for all p, convex iff p >= 1
///   PowerSum       sum |x_i|^s          convex iff s >= 1, homogeneous only at s = 1
struct GaugeSpec {
  enum class Family { RootPowerSum, PowerSum };

  Family family;
  double exponent;

  static GaugeSpec root_power_sum(double p) { return make(Family::RootPowerSum, p); }
  static GaugeSpec power_sum(double s) { return make(Family::PowerSum, s); }

 private:
  static GaugeSpec make(Family f, double e) {
    if (!(e > 0.0))
      throw std::invalid_argument("gauge exponent must be > 0, got " +
                                  std::to_string(e));
    return {f, e};
  }
};

template <typename Derived>
double gauge_value(const GaugeSpec& spec, const Eigen::MatrixBase<Derived>& x) {
  const double e = spec.exponent;
  double acc = 0.0;
  for (Index i = 0; i < x.size(); ++i)
    acc += std::pow(std::abs(static_cast<double>(x(i))), e);
  if (spec.family == GaugeSpec::Family::PowerSum) return acc;
  return e == 1.0 ? acc : std::pow(acc, 1.0 / e);
}

}  // namespace pmetrics
