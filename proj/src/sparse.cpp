#include "pmetrics/sparse.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include <Eigen/QR>

#include "pmetrics/errors.hpp"

namespace pmetrics {

LinearSystem::LinearSystem(Matrix A_in, Vector b_in)
    : A(std::move(A_in)), b(std::move(b_in)) {
  if (A.rows() < 1 || A.cols() < 1)
    throw std::invalid_argument("LinearSystem: matrix must be at least 1x1");
  if (b.size() != A.rows())
    throw DimensionMismatch("LinearSystem: b has " + std::to_string(b.size()) +
                            " entries for " + std::to_string(A.rows()) +
                            " rows");
  if (!A.allFinite() || !b.allFinite())
    throw std::invalid_argument("LinearSystem: entries must be finite");
}

std::vector<Index> support_indices(const Vector& x, double tau) {
  std::vector<Index> support;
  for (Index i = 0; i < x.size(); ++i)
    if (std::abs(x(i)) > tau) support.push_back(i);
  return support;
}

namespace {

// Advances `idx` to the next k-combination of {0, ..., n-1} in lexicographic
// order; returns false after the last one.
bool next_combination(std::vector<Index>& idx, Index n) {
  const Index k = static_cast<Index>(idx.size());
  for (Index pos = k - 1; pos >= 0; --pos) {
    if (idx[static_cast<std::size_t>(pos)] < n - k + pos) {
      ++idx[static_cast<std::size_t>(pos)];
      for (Index j = pos + 1; j < k; ++j)
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

SparseSolution assemble_solution(const LinearSystem& sys,
                                 const std::vector<Index>& selected,
                                 const Vector& coeffs, double tau) {
  SparseSolution solution;
  solution.x = Vector::Zero(sys.cols());
  for (std::size_t j = 0; j < selected.size(); ++j)
    solution.x(selected[j]) = coeffs(static_cast<Index>(j));
  solution.support = support_indices(solution.x, tau);
  solution.residual = (sys.A * solution.x - sys.b).norm();
  return solution;
}

}  // namespace

L0Result l0_min_bruteforce(const LinearSystem& sys, double residual_tol,
                           Index max_support, double tau) {
  constexpr Index kEnumerationCap = 24;
  const Index n = sys.cols();
  if (n > kEnumerationCap)
    throw std::invalid_argument("l0_min_bruteforce: " + std::to_string(n) +
                                " columns exceed the enumeration cap of " +
                                std::to_string(kEnumerationCap));
  if (!(residual_tol > 0.0))
    throw std::invalid_argument("l0_min_bruteforce: residual_tol must be > 0");
  if (max_support < 0 || max_support > n) max_support = n;

  L0Result result;
  result.best_residual = sys.b.norm();
  result.supports_tried = 1;  // the empty support
  if (result.best_residual <= residual_tol) {
    result.solution = assemble_solution(sys, {}, Vector(0), tau);
    return result;
  }

  Matrix columns(sys.rows(), max_support);
  for (Index k = 1; k <= max_support; ++k) {
    std::vector<Index> selected(static_cast<std::size_t>(k));
    for (Index j = 0; j < k; ++j) selected[static_cast<std::size_t>(j)] = j;
    do {
      for (Index j = 0; j < k; ++j)
        columns.col(j) = sys.A.col(selected[static_cast<std::size_t>(j)]);
      const auto block = columns.leftCols(k);
      Eigen::CompleteOrthogonalDecomposition<Matrix> cod(block);
      const Vector coeffs = cod.solve(sys.b);
      const double residual = (block * coeffs - sys.b).norm();
      ++result.supports_tried;
      result.best_residual = std::min(result.best_residual, residual);
      if (residual <= residual_tol) {
        // Lexicographic enumeration makes this the canonical minimizer.
        result.solution = assemble_solution(sys, selected, coeffs, tau);
        return result;
      }
    } while (next_combination(selected, n));
  }
  return result;
}

std::vector<Vector> solution_space_sample(const LinearSystem& sys, Index count,
                                          std::uint64_t seed) {
  if (count < 0)
    throw std::invalid_argument("solution_space_sample: count must be >= 0");
  if (sys.rows() >= sys.cols())
    throw std::invalid_argument(
        "solution_space_sample: system must be underdetermined (rows < cols)");

  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(sys.A);
  const Vector particular = cod.solve(sys.b);
  if ((sys.A * particular - sys.b).norm() > 1e-10)
    throw InfeasibleSystem("solution_space_sample: system is inconsistent");

  // Orthonormal null-space basis: trailing columns of Q from a rank-revealing
  // QR of A^T.
  Eigen::ColPivHouseholderQR<Matrix> qr(sys.A.transpose());
  const Index rank = qr.rank();
  const Matrix q = qr.householderQ();
  const Matrix null_basis = q.rightCols(sys.cols() - rank);

  std::vector<Vector> samples;
  samples.reserve(static_cast<std::size_t>(count));
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (Index i = 0; i < count; ++i) {
    Vector coeffs(null_basis.cols());
    for (Index j = 0; j < coeffs.size(); ++j) coeffs(j) = gauss(rng);
    samples.push_back(particular + null_basis * coeffs);
  }
  return samples;
}

LimitScan sparsity_profile(const Vector& x, const std::vector<double>& s_list,
                           double tau) {
  return limit_scan(x, Vector::Zero(x.size()), s_list, tau);
}

SurrogateRanking surrogate_ranking_experiment(const LinearSystem& sys, double s,
                                              Index samples, std::uint64_t seed,
                                              double residual_tol, double tau) {
  if (!(s > 0.0 && s <= 1.0))
    throw std::invalid_argument("surrogate_ranking_experiment: s must lie in (0, 1]");
  if (samples < 0)
    throw std::invalid_argument("surrogate_ranking_experiment: samples must be >= 0");

  const L0Result l0 = l0_min_bruteforce(sys, residual_tol, -1, tau);
  if (!l0.solution)
    throw InfeasibleSystem(
        "surrogate_ranking_experiment: no support meets the residual "
        "tolerance; best residual " + std::to_string(l0.best_residual));

  std::vector<Vector> candidates;
  if (samples > 0) candidates = solution_space_sample(sys, samples, seed);
  candidates.push_back(l0.solution->x);

  SurrogateRanking ranking;
  const Vector origin = Vector::Zero(sys.cols());
  ranking.table.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    SurrogateRanking::Row row;
    row.x = candidates[i];
    row.ds_value = ds_distance(s, row.x, origin);
    row.support_size = support_distance(row.x, origin, tau);
    row.is_l0_optimum = (i + 1 == candidates.size());
    ranking.table.push_back(std::move(row));
  }

  ranking.l0_row = static_cast<Index>(ranking.table.size()) - 1;
  ranking.surrogate_argmin = 0;
  for (std::size_t i = 1; i < ranking.table.size(); ++i)
    if (ranking.table[i].ds_value <
        ranking.table[static_cast<std::size_t>(ranking.surrogate_argmin)].ds_value)
      ranking.surrogate_argmin = static_cast<Index>(i);

  const auto& winner = ranking.table[static_cast<std::size_t>(ranking.surrogate_argmin)];
  ranking.argmin_agreement =
      support_indices(winner.x, tau) == l0.solution->support;
  return ranking;
}

}  // namespace pmetrics
