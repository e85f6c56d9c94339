#pragma once

#include <Eigen/Dense>
#include <set>
#include <vector>

namespace recover {

struct SolveConfig {
  /// Hard-threshold level lambda applied entrywise to the coefficients.
  double hard_thres = 0.1;
  /// Shrinkage weight mu of the row-sparsity step; a residual row survives
  /// into the outlier matrix only if its l2 norm exceeds 1/mu.
  double row_thres = 0.0125;
  /// Stop once the entrywise max change of the outlier matrix is <= tol.
  double tol = 0.005;
  int max_iter = 500;
};

struct SolveReport {
  Eigen::MatrixXd coefficients;  // r x d
  Eigen::MatrixXd outliers;      // m' x d
  Eigen::MatrixXd multiplier;    // m' x d
  int iterations = 0;
  /// max |E^k - E^{k-1}| per iteration; length == iterations.
  std::vector<double> residual_history;
  /// max |Phi C + E - V| per iteration.
  std::vector<double> feasibility_history;
  /// Rows (0-based, local to the input matrices) with nonzero outlier rows.
  std::set<long> detected_rows;
  bool converged = false;
};

/// Entrywise hard threshold: entries with |u| >= gamma kept, others zeroed.
Eigen::MatrixXd hard_threshold(const Eigen::MatrixXd& u, double gamma);

/// Row-wise group shrinkage: each row's l2 norm is reduced by 1/gamma with
/// direction preserved; rows with norm <= 1/gamma become exactly zero.
Eigen::MatrixXd row_shrink(const Eigen::MatrixXd& u, double gamma);

/// One coefficient step: least squares of Phi * C ~ V - E - b, then hard
/// threshold with lambda. Throws RankDeficientError if Phi is column-rank
/// deficient.
Eigen::MatrixXd solve_c_step(const Eigen::MatrixXd& phi, const Eigen::MatrixXd& v,
                             const Eigen::MatrixXd& outliers,
                             const Eigen::MatrixXd& multiplier, double lambda);

/// Alternating minimization for the row-sparse robust recovery model:
/// coefficient least squares + hard threshold, row shrinkage for the
/// outliers, additive multiplier update, until the outlier iterates settle.
SolveReport solve(const Eigen::MatrixXd& phi, const Eigen::MatrixXd& v,
                  const SolveConfig& config);

}  // namespace recover
