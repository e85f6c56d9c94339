#include "recover/solver.hpp"

#include <Eigen/QR>
#include <cmath>
#include <string>

#include "recover/errors.hpp"

namespace recover {

Eigen::MatrixXd hard_threshold(const Eigen::MatrixXd& u, double gamma) {
  if (gamma < 0.0) throw Error("hard_threshold: gamma must be non-negative");
  return (u.cwiseAbs().array() >= gamma).select(u, 0.0);
}

Eigen::MatrixXd row_shrink(const Eigen::MatrixXd& u, double gamma) {
  if (gamma <= 0.0) throw Error("row_shrink: gamma must be positive");
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(u.rows(), u.cols());
  for (long j = 0; j < u.rows(); ++j) {
    const double norm = u.row(j).norm();
    const double factor = 1.0 - 1.0 / (gamma * norm);  // norm > 0 when used
    if (norm > 1.0 / gamma) out.row(j) = factor * u.row(j);
  }
  return out;
}

namespace {

Eigen::ColPivHouseholderQR<Eigen::MatrixXd> factor_checked(const Eigen::MatrixXd& phi) {
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(phi);
  if (qr.rank() < phi.cols()) {
    throw RankDeficientError("dictionary is column-rank deficient: rank " +
                                 std::to_string(qr.rank()) + " of " +
                                 std::to_string(phi.cols()),
                             qr.rank());
  }
  return qr;
}

}  // namespace

Eigen::MatrixXd solve_c_step(const Eigen::MatrixXd& phi, const Eigen::MatrixXd& v,
                             const Eigen::MatrixXd& outliers,
                             const Eigen::MatrixXd& multiplier, double lambda) {
  const auto qr = factor_checked(phi);
  return hard_threshold(qr.solve(v - outliers - multiplier), lambda);
}

SolveReport solve(const Eigen::MatrixXd& phi, const Eigen::MatrixXd& v,
                  const SolveConfig& config) {
  if (phi.rows() != v.rows()) {
    throw DimensionError("solve: dictionary and derivative row counts differ");
  }
  if (config.hard_thres <= 0.0 || config.row_thres <= 0.0 || config.tol <= 0.0) {
    throw Error("solve: thresholds must be positive");
  }
  if (config.max_iter < 1) throw Error("solve: max_iter must be >= 1");

  // Phi is constant across iterations; factor once, reuse per right-hand side.
  const auto qr = factor_checked(phi);
  const double mu = config.row_thres;

  SolveReport report;
  report.outliers = Eigen::MatrixXd::Zero(v.rows(), v.cols());
  report.multiplier = Eigen::MatrixXd::Zero(v.rows(), v.cols());

  for (int k = 1; k <= config.max_iter; ++k) {
    report.coefficients =
        hard_threshold(qr.solve(v - report.outliers - report.multiplier),
                       config.hard_thres);
    const Eigen::MatrixXd fit = phi * report.coefficients;
    const Eigen::MatrixXd next_outliers = row_shrink(v - report.multiplier - fit, mu);
    report.multiplier += fit + next_outliers - v;

    const double change = (next_outliers - report.outliers).cwiseAbs().maxCoeff();
    report.outliers = next_outliers;
    report.iterations = k;
    report.residual_history.push_back(change);
    report.feasibility_history.push_back(
        (fit + report.outliers - v).cwiseAbs().maxCoeff());

    if (!report.outliers.allFinite() || !report.coefficients.allFinite() ||
        !report.multiplier.allFinite()) {
      throw DivergenceError("solve: non-finite iterate at iteration " +
                                std::to_string(k),
                            k);
    }
    if (change <= config.tol) {
      report.converged = true;
      break;
    }
  }

  for (long j = 0; j < report.outliers.rows(); ++j) {
    if (report.outliers.row(j).norm() > 0.0) report.detected_rows.insert(j);
  }
  return report;
}

}  // namespace recover
