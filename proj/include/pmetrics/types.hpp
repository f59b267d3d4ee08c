#pragma once

#include <cstdint>

#include <Eigen/Core>

namespace pmetrics {

using Index = Eigen::Index;
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Two reals closer than this are treated as equal by the discrete metric,
/// support counting, and everything built on them. Overridable per call.
inline constexpr double kDefaultTau = 1e-9;

/// Residual threshold separating numerical zeros from signal in the
/// sparse-recovery routines.
inline constexpr double kDefaultResidualTol = 1e-8;

/// SplitMix64 mix of a master seed and a trial index. Each trial of a
/// randomized search draws from its own stream, so results do not depend on
/// trial order or on a parallel schedule.
inline std::uint64_t subseed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace pmetrics
