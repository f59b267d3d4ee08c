#include "pmetrics/axioms.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace pmetrics {

const char* metric_axiom_name(MetricAxiom axiom) {
  switch (axiom) {
    case MetricAxiom::Nonnegativity: return "nonnegativity";
    case MetricAxiom::Identity:      return "identity";
    case MetricAxiom::Symmetry:      return "symmetry";
    case MetricAxiom::Triangle:      return "triangle";
    case MetricAxiom::NonFinite:     return "non-finite";
  }
  return "unknown";
}

namespace {

Vector sample_point(std::mt19937_64& rng, Index dim, const SampleBox& box) {
  std::uniform_real_distribution<double> coord(box.lo, box.hi);
  Vector v(dim);
  for (Index i = 0; i < dim; ++i) v(i) = coord(rng);
  return v;
}

}  // namespace

AxiomReport check_metric_axioms(const DistanceFn& d, Index dim, SampleBox box,
                                Index trials, double tol, std::uint64_t seed,
                                double tau) {
  if (!d) throw std::invalid_argument("check_metric_axioms: null distance function");
  if (dim < 1) throw std::invalid_argument("check_metric_axioms: dim must be >= 1");
  if (trials < 1) throw std::invalid_argument("check_metric_axioms: trials must be >= 1");
  if (!(box.lo < box.hi)) throw std::invalid_argument("check_metric_axioms: empty sampling box");

  AxiomReport report;
  report.trials_run = trials;

  for (Index trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng(subseed(seed, static_cast<std::uint64_t>(trial)));
    const Vector x = sample_point(rng, dim, box);
    const Vector y = sample_point(rng, dim, box);
    const Vector z = sample_point(rng, dim, box);

    const double dxx = d(x, x);
    const double dxy = d(x, y);
    const double dyx = d(y, x);
    const double dxz = d(x, z);
    const double dzy = d(z, y);

    bool finite = true;
    for (double value : {dxx, dxy, dyx, dxz, dzy}) {
      if (!std::isfinite(value)) {
        report.violations.push_back({MetricAxiom::NonFinite, x, y, z, value});
        finite = false;
        break;
      }
    }
    if (!finite) continue;

    if (std::abs(dxx) > tol)
      report.violations.push_back({MetricAxiom::Identity, x, x, Vector(), std::abs(dxx)});

    if (dxy < -tol)
      report.violations.push_back({MetricAxiom::Nonnegativity, x, y, Vector(), -dxy});

    // d(x, y) = 0 must pin x to y; random draws are never tau-equal, so a
    // vanishing distance between separated points is an identity failure.
    const double separation = (x - y).lpNorm<Eigen::Infinity>();
    if (std::abs(dxy) <= tol && separation > tau)
      report.violations.push_back({MetricAxiom::Identity, x, y, Vector(), separation});

    if (std::abs(dxy - dyx) > tol)
      report.violations.push_back({MetricAxiom::Symmetry, x, y, Vector(), std::abs(dxy - dyx)});

    const double excess = dxy - (dxz + dzy);
    if (excess > tol)
      report.violations.push_back({MetricAxiom::Triangle, x, y, z, excess});
  }
  return report;
}

}  // namespace pmetrics
