#include "pmetrics/minkowski.hpp"

#include <cmath>
#include <stdexcept>

#include "pmetrics/errors.hpp"

namespace pmetrics {

double minkowski_functional(const ConvexBodyOracle& body, const Vector& x,
                            double tol) {
  if (!body.contains)
    throw std::invalid_argument("minkowski_functional: null membership oracle");
  if (!(body.inner_radius > 0.0) || !(body.outer_radius >= body.inner_radius))
    throw std::invalid_argument(
        "minkowski_functional: need 0 < inner_radius <= outer_radius");
  if (!(tol > 0.0))
    throw std::invalid_argument("minkowski_functional: tol must be > 0");

  const double norm2 = x.norm();
  if (norm2 == 0.0) return 0.0;

  // x / lambda shrinks toward 0 in K as lambda grows, so membership in
  // lambda K is monotone in lambda. The sandwich S(0, r) in K in S(0, R)
  // brackets the infimum in [||x|| / R, ||x|| / r]. Both ends get a hair of
  // slack: at the exact brackets x / lambda sits on a bounding sphere, where
  // an open K (or rounding, when K touches the sphere) can answer either way.
  constexpr double kBracketSlack = 1e-9;
  double lo = (norm2 / body.outer_radius) * (1.0 - kBracketSlack);
  double hi = (norm2 / body.inner_radius) * (1.0 + kBracketSlack);

  if (body.contains(x / lo))
    throw OracleContractError(
        "minkowski_functional: oracle contains a point on the outer sphere");
  if (!body.contains(x / hi))
    throw OracleContractError(
        "minkowski_functional: oracle excludes x at the upper bracket; "
        "declared inner radius is inconsistent");

  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    (body.contains(x / mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace pmetrics
