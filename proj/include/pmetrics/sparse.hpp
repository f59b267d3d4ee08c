#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pmetrics/product_metric.hpp"
#include "pmetrics/types.hpp"

namespace pmetrics {

/// The linear system A x = b, typically underdetermined (fewer rows than
/// columns). All entries must be finite.
struct LinearSystem {
  Matrix A;
  Vector b;

  LinearSystem(Matrix A_in, Vector b_in);

  Index rows() const { return A.rows(); }
  Index cols() const { return A.cols(); }
};

struct SparseSolution {
  Vector x;
  std::vector<Index> support;  // {i : |x_i| > tau}, ascending
  double residual = 0.0;       // ||A x - b||_2
};

/// Indices of the entries of x larger than tau in magnitude, ascending.
std::vector<Index> support_indices(const Vector& x, double tau = kDefaultTau);

struct L0Result {
  /// Present when some support of size <= max_support meets the residual
  /// tolerance; absent means infeasible at that level.
  std::optional<SparseSolution> solution;
  double best_residual = 0.0;  // smallest residual seen over all supports tried
  Index supports_tried = 0;
};

/**
 * Exact minimum-support solution by exhaustive enumeration: supports are
 * visited in increasing cardinality k = 0, 1, ..., max_support and
 * lexicographically within each k, each subproblem solved in the least
 * squares sense by a complete orthogonal decomposition (minimum-norm on
 * rank-deficient column subsets). The first support meeting residual_tol
 * wins, which makes the result minimal in cardinality and deterministic
 * under ties.
 *
 * Guarded to n <= 24 columns; the subproblem count is exponential.
 * max_support < 0 means "up to n".
 */
L0Result l0_min_bruteforce(const LinearSystem& sys,
                           double residual_tol = kDefaultResidualTol,
                           Index max_support = -1, double tau = kDefaultTau);

/**
 * Random exact solutions of a consistent underdetermined system: the
 * minimum-norm particular solution plus Gaussian combinations of an
 * orthonormal null-space basis (from a rank-revealing QR of A^T). Every
 * returned vector satisfies ||A x - b||_2 <= 1e-10.
 *
 * Throws InfeasibleSystem when the system is inconsistent and
 * std::invalid_argument unless rows < cols.
 */
std::vector<Vector> solution_space_sample(const LinearSystem& sys, Index count,
                                          std::uint64_t seed);

/// d_s(x, 0) over a list of exponents plus the support size of x.
LimitScan sparsity_profile(const Vector& x, const std::vector<double>& s_list,
                           double tau = kDefaultTau);

struct SurrogateRanking {
  struct Row {
    Vector x;
    double ds_value = 0.0;    // d_s(x, 0)
    Index support_size = 0;   // ||x||_0
    bool is_l0_optimum = false;
  };

  std::vector<Row> table;       // sampled exact solutions plus the l0 optimum
  Index surrogate_argmin = 0;   // row index minimizing d_s
  Index l0_row = 0;             // row index of the l0 optimum
  bool argmin_agreement = false;  // surrogate winner shares the l0 support
};

/**
 * Evaluates the d_s sparsity surrogate over sampled exact solutions plus the
 * exact l0 minimizer, and reports whether the surrogate's argmin has the same
 * support as the l0 optimum. Ties resolve to the earliest row, so the report
 * is deterministic for a given seed.
 */
SurrogateRanking surrogate_ranking_experiment(
    const LinearSystem& sys, double s, Index samples, std::uint64_t seed,
    double residual_tol = kDefaultResidualTol, double tau = kDefaultTau);

}  // namespace pmetrics
