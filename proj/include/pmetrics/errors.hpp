#pragma once

#include <stdexcept>

namespace pmetrics {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The requested geometry is degenerate under the given metric, e.g. radial
/// boundary sampling against a metric with a discrete component.
struct UnsupportedGeometry : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A ConvexBodyOracle answered inconsistently with its declared radii.
struct OracleContractError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The linear system admits no solution at the required residual.
struct InfeasibleSystem : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pmetrics
