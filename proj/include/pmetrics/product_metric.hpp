#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pmetrics/errors.hpp"
#include "pmetrics/exponent.hpp"
#include "pmetrics/scalar_metric.hpp"
#include "pmetrics/types.hpp"

namespace pmetrics {

/// A Cartesian-product metric on R^n: one base metric per coordinate,
/// combined with exponent p >= 1 (sum of p-th powers, then the p-th root) or
/// p = infinity (max over coordinates).
class ProductMetricSpec {
 public:
  ProductMetricSpec(std::vector<ScalarMetric> components, Exponent p)
      : components_(std::move(components)), p_(p) {
    if (components_.empty())
      throw std::invalid_argument("product metric needs at least one component");
  }

  static ProductMetricSpec uniform(const ScalarMetric& metric, Index n,
                                   Exponent p) {
    if (n < 1) throw std::invalid_argument("product metric dimension must be >= 1");
    return ProductMetricSpec(
        std::vector<ScalarMetric>(static_cast<std::size_t>(n), metric), p);
  }

  static ProductMetricSpec euclidean(Index n) {
    return uniform(ScalarMetric::absolute(), n, 2.0);
  }
  static ProductMetricSpec manhattan(Index n) {
    return uniform(ScalarMetric::absolute(), n, 1.0);
  }

  Index size() const { return static_cast<Index>(components_.size()); }
  const std::vector<ScalarMetric>& components() const { return components_; }
  Exponent p() const { return p_; }

  bool has_discrete_component() const {
    return std::any_of(components_.begin(), components_.end(),
                       [](const ScalarMetric& m) {
                         return m.kind() == ScalarMetric::Kind::Discrete;
                       });
  }

 private:
  std::vector<ScalarMetric> components_;
  Exponent p_;
};

/**
 * Product distance between two vectors (or vector expressions).
 *
 * Finite p accumulates sum_i rho_i(x_i, y_i)^p and takes the p-th root;
 * p = 1 skips the powers entirely, so p = 1 results are plain sums of the
 * component distances. p = infinity takes the max component distance.
 */
template <typename DerivedA, typename DerivedB>
double product_distance(const ProductMetricSpec& spec,
                        const Eigen::MatrixBase<DerivedA>& x,
                        const Eigen::MatrixBase<DerivedB>& y,
                        double tau = kDefaultTau) {
  const Index n = spec.size();
  if (x.size() != n || y.size() != n)
    throw DimensionMismatch("product_distance: operands of size " +
                            std::to_string(x.size()) + " and " +
                            std::to_string(y.size()) +
                            " do not match metric dimension " +
                            std::to_string(n));
  const auto& comps = spec.components();
  if (spec.p().is_infinity()) {
    double worst = 0.0;
    for (Index i = 0; i < n; ++i)
      worst = std::max(worst, scalar_distance(comps[static_cast<std::size_t>(i)],
                                              x(i), y(i), tau));
    return worst;
  }
  const double p = spec.p().value();
  double acc = 0.0;
  for (Index i = 0; i < n; ++i) {
    const double rho =
        scalar_distance(comps[static_cast<std::size_t>(i)], x(i), y(i), tau);
    acc += (p == 1.0) ? rho : std::pow(rho, p);
  }
  return (p == 1.0) ? acc : std::pow(acc, 1.0 / p);
}

/// Sum of |x_i - y_i|^s over the coordinates, 0 < s <= 1. Identical to
/// product_distance with all-power(s) components and p = 1, term for term.
template <typename DerivedA, typename DerivedB>
double ds_distance(double s, const Eigen::MatrixBase<DerivedA>& x,
                   const Eigen::MatrixBase<DerivedB>& y) {
  if (!(s > 0.0 && s <= 1.0))
    throw std::invalid_argument("ds_distance exponent must lie in (0, 1], got " +
                                std::to_string(s));
  if (x.size() != y.size())
    throw DimensionMismatch("ds_distance: dimensions " +
                            std::to_string(x.size()) + " vs " +
                            std::to_string(y.size()));
  double acc = 0.0;
  for (Index i = 0; i < x.size(); ++i)
    acc += detail::abs_power(static_cast<double>(x(i)) - static_cast<double>(y(i)), s);
  return acc;
}

/// Number of coordinates where x and y differ by more than tau. With y = 0
/// this is the support size of x (the l0 sparsity count).
template <typename DerivedA, typename DerivedB>
Index support_distance(const Eigen::MatrixBase<DerivedA>& x,
                       const Eigen::MatrixBase<DerivedB>& y,
                       double tau = kDefaultTau) {
  if (tau < 0.0) throw std::invalid_argument("support_distance: tau must be >= 0");
  if (x.size() != y.size())
    throw DimensionMismatch("support_distance: dimensions " +
                            std::to_string(x.size()) + " vs " +
                            std::to_string(y.size()));
  Index count = 0;
  for (Index i = 0; i < x.size(); ++i)
    if (std::abs(static_cast<double>(x(i)) - static_cast<double>(y(i))) > tau)
      ++count;
  return count;
}

/// Trajectory of d_s(x, y) over a list of exponents, together with the
/// support distance it converges to as s -> 0+.
struct LimitScan {
  std::vector<std::pair<double, double>> values;  // (s, d_s(x, y))
  Index support = 0;                              // d_0(x, y)
};

inline LimitScan limit_scan(const Vector& x, const Vector& y,
                            const std::vector<double>& s_list,
                            double tau = kDefaultTau) {
  if (s_list.empty()) throw std::invalid_argument("limit_scan: empty exponent list");
  LimitScan scan;
  scan.values.reserve(s_list.size());
  for (double s : s_list) scan.values.emplace_back(s, ds_distance(s, x, y));
  scan.support = support_distance(x, y, tau);
  return scan;
}

/// Largest |product metric restricted to coordinate i - component metric|
/// over the given value pairs. Zero (up to rounding) whenever the product
/// metric is compatible with its components.
inline double embedding_compatibility_check(
    const ProductMetricSpec& spec, const Vector& anchor, Index i,
    const std::vector<std::pair<double, double>>& pairs,
    double tau = kDefaultTau) {
  if (anchor.size() != spec.size())
    throw DimensionMismatch("embedding_compatibility_check: anchor dimension " +
                            std::to_string(anchor.size()) +
                            " vs metric dimension " + std::to_string(spec.size()));
  if (i < 0 || i >= spec.size())
    throw std::out_of_range("embedding_compatibility_check: coordinate index " +
                            std::to_string(i) + " out of range");
  const ScalarMetric& component = spec.components()[static_cast<std::size_t>(i)];
  double worst = 0.0;
  Vector u = anchor;
  Vector v = anchor;
  for (const auto& [t, t_prime] : pairs) {
    u(i) = t;
    v(i) = t_prime;
    const double embedded = product_distance(spec, u, v, tau);
    const double direct = scalar_distance(component, t, t_prime, tau);
    worst = std::max(worst, std::abs(embedded - direct));
  }
  return worst;
}

}  // namespace pmetrics
