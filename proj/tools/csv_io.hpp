#pragma once

#include <string>

#include "pmetrics/types.hpp"

namespace pmetrics::cli {

/// Strict CSV reader for numeric matrices: comma-separated, no header, one
/// matrix row per line. Rejects ragged rows, empty cells, and non-finite
/// values. Throws std::runtime_error with a line-numbered message.
Matrix read_csv_matrix(const std::string& path);

/// Vector variant: accepts a single column, a single row, or any matrix with
/// exactly one of those shapes.
Vector read_csv_vector(const std::string& path);

}  // namespace pmetrics::cli
