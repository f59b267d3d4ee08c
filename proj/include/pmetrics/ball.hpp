#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pmetrics/product_metric.hpp"
#include "pmetrics/types.hpp"

namespace pmetrics {

/// Metric a ball is measured under: a full product spec, the d_s designator
/// (all power-s components, p = 1, dimension taken from the points), or the
/// d_0 support-count designator.
class BallMetric {
 public:
  enum class Kind { Product, PowerSumFamily, Support };

  static BallMetric product(ProductMetricSpec spec) {
    BallMetric m;
    m.kind_ = Kind::Product;
    m.spec_ = std::move(spec);
    return m;
  }

  static BallMetric ds(double s) {
    if (!(s > 0.0 && s <= 1.0))
      throw std::invalid_argument("ball metric d_s exponent must lie in (0, 1]");
    BallMetric m;
    m.kind_ = Kind::PowerSumFamily;
    m.s_ = s;
    return m;
  }

  static BallMetric support() {
    BallMetric m;
    m.kind_ = Kind::Support;
    return m;
  }

  Kind kind() const { return kind_; }

  double distance(const Vector& a, const Vector& b, double tau = kDefaultTau) const;

  /// True when distance along a ray from the center varies continuously
  /// (no discrete component, not the support count).
  bool is_continuous() const;

 private:
  BallMetric() = default;

  Kind kind_ = Kind::Support;
  std::optional<ProductMetricSpec> spec_;
  double s_ = 1.0;
};

struct BallSpec {
  Vector center;
  double radius = 1.0;
  BallMetric metric = BallMetric::ds(1.0);
  bool closed = true;  // closed = false with radius = 0 denotes the empty set
};

bool ball_contains(const BallSpec& ball, const Vector& point,
                   double tau = kDefaultTau);

struct BoundaryPoint {
  double theta;
  Eigen::Vector2d point;
};

/**
 * Boundary of a planar ball, sampled along n_dirs equally spaced directions.
 * Along each direction the radial distance is nondecreasing for the
 * continuous metrics, so the crossing d = r is found by growing a bracket
 * geometrically from [0, 1] and bisecting; every returned point satisfies
 * |d(point, center) - r| <= tol.
 *
 * Metrics with a discrete component (or the support designator) have
 * degenerate boundaries and are rejected with UnsupportedGeometry.
 */
std::vector<BoundaryPoint> ball_boundary_sample_2d(const BallSpec& ball,
                                                   Index n_dirs, double tol);

enum class NestingRegime {
  FineInsideCoarse,  // r < 1: the smaller-s ball lies inside the larger-s ball
  CoarseInsideFine,  // r >= dim: inclusion reverses
  NoInclusion,       // 1 <= r < dim: neither inclusion holds
};

const char* nesting_regime_name(NestingRegime regime);

struct NestingReport {
  NestingRegime regime;
  Index samples_tested = 0;
  Index antecedent_hits = 0;  // sampled points inside the smaller ball
  std::vector<Vector> counterexamples;

  bool violated() const { return !counterexamples.empty(); }
};

/**
 * Sampled inclusion check between closed d_s balls of the same radius,
 * 0 < s_fine < s_coarse <= 1, centered at the origin.
 *
 * For r < 1 the fine ball must lie inside the coarse one; for r >= dim the
 * inclusion reverses. In between (1 <= r < dim) no inclusion holds in either
 * direction and the check declines with the NoInclusion regime, testing
 * nothing.
 */
NestingReport ball_nesting_check(double r, double s_fine, double s_coarse,
                                 Index dim, Index samples, std::uint64_t seed);

/// Membership in the closed limit ball {x : support(x) <= r} at the origin.
/// In the plane: r < 1 keeps only the origin, 1 <= r < 2 keeps the axes,
/// r >= 2 keeps everything.
bool limit_ball_membership(double r, const Vector& point,
                           double tau = kDefaultTau);

/// Closed-form membership for the planar ball of the (discrete, absolute)
/// p = 1 combination: |x2| <= r on the x1 = 0 axis, |x2| <= r - 1 off it
/// (empty off-axis when r < 1). Agrees exactly with ball_contains under the
/// corresponding product metric.
bool alt_ball_contains(double r, const Eigen::Vector2d& point,
                       double tau = kDefaultTau);

enum class DiscreteBallShape { Singleton, WholeSpace };

/// Shape of a closed discrete-metric ball: only the center below radius 1,
/// the whole space from radius 1 up. Radii <= 0 fall back to the singleton
/// (nonnegativity pins d(x, center) = 0 at r = 0; negative radii are treated
/// the same way as that boundary case).
DiscreteBallShape discrete_ball_cases(double r);

}  // namespace pmetrics
