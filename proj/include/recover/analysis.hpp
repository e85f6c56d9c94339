#pragma once

#include <Eigen/Dense>
#include <set>

#include "recover/solver.hpp"

namespace recover {

struct RecoveryScore {
  double coeff_error = 0.0;
  bool outliers_exact = false;
  std::set<long> missed_rows;
  std::set<long> spurious_rows;
  Eigen::VectorXd per_equation_errors;
};

/// Max over true-nonzero entries of the relative error, and over entries
/// recovered nonzero where the truth is zero of the absolute magnitude.
double coefficient_error(const Eigen::MatrixXd& c_true, const Eigen::MatrixXd& c_rec);

/// coefficient_error restricted to each column.
Eigen::VectorXd per_equation_errors(const Eigen::MatrixXd& c_true,
                                    const Eigen::MatrixXd& c_rec);

/// missed = truth \ detected, spurious = detected \ truth.
RecoveryScore score_detection(const std::set<long>& detected,
                              const std::set<long>& truth);

struct RankCheck {
  bool full_rank = false;
  long rank = 0;
  double min_singular_value = 0.0;
};

/// Rank from a pivoted QR with threshold
/// max(rows, cols) * eps * largest_singular_value.
RankCheck check_full_rank(const Eigen::MatrixXd& phi);

/// Brute-force check of the partial null-space property of order s for the
/// pair (Id, A): samples the range of A densely (all sign patterns times a
/// magnitude grid plus 10^4 seeded random draws) and requires the s largest
/// entries of every sampled |v| to sum to strictly less than ||v||_1 / 2.
/// A falsifier: a false result carries a genuine counterexample, a true
/// result is strong sampled evidence. Desk scale only: rows <= 12, cols <= 4.
bool check_partial_nsp(const Eigen::MatrixXd& a, int s);

struct OracleResult {
  Eigen::MatrixXd coefficients;  // r x 1
  Eigen::MatrixXd outliers;      // m' x 1
  bool matched = false;
};

/// Global minimizer of ||E||_1 subject to Phi C + E = V by exhaustive
/// enumeration of outlier supports of size <= s with exact least-squares
/// interpolation on the complement, compared against the main solver's
/// output at tolerance 1e-6. Desk scale: m' <= 40, r <= 4, d = 1, s <= 3.
OracleResult l1_oracle_equivalence(const Eigen::MatrixXd& phi,
                                   const Eigen::MatrixXd& v, int s,
                                   const SolveConfig& config);

}  // namespace recover
