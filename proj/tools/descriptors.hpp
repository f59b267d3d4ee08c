#pragma once

#include <string>
#include <vector>

#include "pmetrics/exponent.hpp"
#include "pmetrics/scalar_metric.hpp"
#include "pmetrics/types.hpp"

namespace pmetrics::cli {

/// One base metric: "abs", "disc", or "pow:<s>" with 0 < s <= 1.
ScalarMetric parse_scalar_metric(const std::string& token);

/// Comma-separated descriptor list, e.g. "abs,pow:0.5,disc".
std::vector<ScalarMetric> parse_metric_list(const std::string& descriptor);

/// "inf" (any case) or a number >= 1.
Exponent parse_exponent(const std::string& token);

/// Comma-separated reals, e.g. "--x 0,0.5,-2".
std::vector<double> parse_double_list(const std::string& text);

Vector parse_vector(const std::string& text);

}  // namespace pmetrics::cli
