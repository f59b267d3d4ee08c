#include "pmetrics/ball.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "pmetrics/errors.hpp"

namespace pmetrics {

double BallMetric::distance(const Vector& a, const Vector& b, double tau) const {
  switch (kind_) {
    case Kind::Product:
      return product_distance(*spec_, a, b, tau);
    case Kind::PowerSumFamily:
      return ds_distance(s_, a, b);
    case Kind::Support:
      return static_cast<double>(support_distance(a, b, tau));
  }
  return 0.0;  // unreachable
}

bool BallMetric::is_continuous() const {
  switch (kind_) {
    case Kind::Product:
      return !spec_->has_discrete_component();
    case Kind::PowerSumFamily:
      return true;
    case Kind::Support:
      return false;
  }
  return false;
}

bool ball_contains(const BallSpec& ball, const Vector& point, double tau) {
  if (ball.radius < 0.0)
    throw std::invalid_argument("ball_contains: radius must be >= 0");
  if (point.size() != ball.center.size())
    throw DimensionMismatch("ball_contains: point dimension " +
                            std::to_string(point.size()) +
                            " vs center dimension " +
                            std::to_string(ball.center.size()));
  const double d = ball.metric.distance(point, ball.center, tau);
  return ball.closed ? d <= ball.radius : d < ball.radius;
}

std::vector<BoundaryPoint> ball_boundary_sample_2d(const BallSpec& ball,
                                                   Index n_dirs, double tol) {
  if (ball.center.size() != 2)
    throw DimensionMismatch("ball_boundary_sample_2d: center must be planar");
  if (!(ball.radius > 0.0))
    throw std::invalid_argument("ball_boundary_sample_2d: radius must be > 0");
  if (n_dirs < 1)
    throw std::invalid_argument("ball_boundary_sample_2d: n_dirs must be >= 1");
  if (!(tol > 0.0))
    throw std::invalid_argument("ball_boundary_sample_2d: tol must be > 0");
  if (!ball.metric.is_continuous())
    throw UnsupportedGeometry(
        "ball_boundary_sample_2d: boundary is degenerate under a discrete "
        "component; see alt_ball_contains / discrete_ball_cases");

  constexpr int kMaxIterations = 100;
  const double r = ball.radius;

  std::vector<BoundaryPoint> boundary;
  boundary.reserve(static_cast<std::size_t>(n_dirs));
  Vector probe(2);

  for (Index k = 0; k < n_dirs; ++k) {
    const double theta =
        2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n_dirs);
    const Eigen::Vector2d direction(std::cos(theta), std::sin(theta));

    const auto radial = [&](double t) {
      probe = ball.center + t * direction;
      return ball.metric.distance(probe, ball.center);
    };

    // Radial distance is 0 at t = 0 and nondecreasing; grow until outside.
    double lo = 0.0;
    double hi = 1.0;
    int growth = 0;
    while (radial(hi) < r) {
      lo = hi;
      hi *= 2.0;
      if (++growth > kMaxIterations)
        throw UnsupportedGeometry(
            "ball_boundary_sample_2d: ray never exits the ball");
    }

    double t = hi;
    double d = radial(t);
    for (int it = 0; it < 2 * kMaxIterations && std::abs(d - r) > tol; ++it) {
      const double mid = 0.5 * (lo + hi);
      d = radial(mid);
      (d < r ? lo : hi) = mid;
      t = mid;
    }
    if (std::abs(d - r) > tol)
      throw std::runtime_error("ball_boundary_sample_2d: bisection stalled");

    boundary.push_back({theta, ball.center + t * direction});
  }
  return boundary;
}

const char* nesting_regime_name(NestingRegime regime) {
  switch (regime) {
    case NestingRegime::FineInsideCoarse: return "fine-inside-coarse";
    case NestingRegime::CoarseInsideFine: return "coarse-inside-fine";
    case NestingRegime::NoInclusion:      return "no-inclusion-regime";
  }
  return "unknown";
}

NestingReport ball_nesting_check(double r, double s_fine, double s_coarse,
                                 Index dim, Index samples, std::uint64_t seed) {
  if (!(s_fine > 0.0 && s_fine < s_coarse && s_coarse <= 1.0))
    throw std::invalid_argument(
        "ball_nesting_check: need 0 < s_fine < s_coarse <= 1");
  if (dim < 1) throw std::invalid_argument("ball_nesting_check: dim must be >= 1");
  if (!(r > 0.0)) throw std::invalid_argument("ball_nesting_check: r must be > 0");

  NestingReport report;
  if (r >= 1.0 && r < static_cast<double>(dim)) {
    report.regime = NestingRegime::NoInclusion;
    return report;
  }

  const bool shrinking = r < 1.0;
  report.regime = shrinking ? NestingRegime::FineInsideCoarse
                            : NestingRegime::CoarseInsideFine;

  // Antecedent ball: the one claimed to lie inside. Its coordinate bound
  // |x_i| <= r^(1/s) bounds the sampling box, so hits are frequent.
  const double s_antecedent = shrinking ? s_fine : s_coarse;
  const double s_consequent = shrinking ? s_coarse : s_fine;
  const double half_width = std::pow(r, 1.0 / s_antecedent);

  const Vector origin = Vector::Zero(dim);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-half_width, half_width);

  Vector x(dim);
  for (Index i = 0; i < samples; ++i) {
    for (Index j = 0; j < dim; ++j) x(j) = coord(rng);
    ++report.samples_tested;
    if (ds_distance(s_antecedent, x, origin) > r) continue;
    ++report.antecedent_hits;
    if (ds_distance(s_consequent, x, origin) > r)
      report.counterexamples.push_back(x);
  }
  return report;
}

bool limit_ball_membership(double r, const Vector& point, double tau) {
  return static_cast<double>(support_distance(point, Vector::Zero(point.size()), tau)) <= r;
}

bool alt_ball_contains(double r, const Eigen::Vector2d& point, double tau) {
  if (std::abs(point.x()) <= tau) return std::abs(point.y()) <= r;
  return std::abs(point.y()) <= r - 1.0;
}

DiscreteBallShape discrete_ball_cases(double r) {
  return r >= 1.0 ? DiscreteBallShape::WholeSpace : DiscreteBallShape::Singleton;
}

}  // namespace pmetrics
