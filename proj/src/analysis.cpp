#include "recover/analysis.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "recover/errors.hpp"
#include "recover/rng.hpp"

namespace recover {

double coefficient_error(const Eigen::MatrixXd& c_true, const Eigen::MatrixXd& c_rec) {
  if (c_true.rows() != c_rec.rows() || c_true.cols() != c_rec.cols()) {
    throw DimensionError("coefficient_error: shape mismatch");
  }
  double error = 0.0;
  for (long i = 0; i < c_true.rows(); ++i) {
    for (long j = 0; j < c_true.cols(); ++j) {
      if (c_true(i, j) != 0.0) {
        error = std::max(error, std::abs((c_rec(i, j) - c_true(i, j)) / c_true(i, j)));
      } else if (c_rec(i, j) != 0.0) {
        // Spurious terms are scored by absolute magnitude.
        error = std::max(error, std::abs(c_rec(i, j)));
      }
    }
  }
  return error;
}

Eigen::VectorXd per_equation_errors(const Eigen::MatrixXd& c_true,
                                    const Eigen::MatrixXd& c_rec) {
  if (c_true.rows() != c_rec.rows() || c_true.cols() != c_rec.cols()) {
    throw DimensionError("per_equation_errors: shape mismatch");
  }
  Eigen::VectorXd errors(c_true.cols());
  for (long j = 0; j < c_true.cols(); ++j) {
    errors(j) = coefficient_error(c_true.col(j), c_rec.col(j));
  }
  return errors;
}

RecoveryScore score_detection(const std::set<long>& detected,
                              const std::set<long>& truth) {
  RecoveryScore score;
  std::set_difference(truth.begin(), truth.end(), detected.begin(), detected.end(),
                      std::inserter(score.missed_rows, score.missed_rows.begin()));
  std::set_difference(detected.begin(), detected.end(), truth.begin(), truth.end(),
                      std::inserter(score.spurious_rows, score.spurious_rows.begin()));
  score.outliers_exact = score.missed_rows.empty() && score.spurious_rows.empty();
  return score;
}

RankCheck check_full_rank(const Eigen::MatrixXd& phi) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(phi);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double threshold = static_cast<double>(std::max(phi.rows(), phi.cols())) *
                           std::numeric_limits<double>::epsilon() * sv(0);
  RankCheck check;
  check.rank = (sv.array() > threshold).count();
  check.full_rank = check.rank == std::min(phi.rows(), phi.cols());
  check.min_singular_value = sv(sv.size() - 1);
  return check;
}

namespace {

// ||v_S||_1 maximized over |S| = s, i.e. the sum of the s largest |v_i|.
double top_s_abs_sum(const Eigen::VectorXd& v, int s) {
  std::vector<double> mags(v.size());
  for (long i = 0; i < v.size(); ++i) mags[static_cast<std::size_t>(i)] = std::abs(v(i));
  std::partial_sort(mags.begin(), mags.begin() + s, mags.end(), std::greater<>());
  double sum = 0.0;
  for (int i = 0; i < s; ++i) sum += mags[static_cast<std::size_t>(i)];
  return sum;
}

bool nsp_holds_for(const Eigen::MatrixXd& a, const Eigen::VectorXd& w, int s) {
  const Eigen::VectorXd v = a * w;
  const double total = v.cwiseAbs().sum();
  if (total <= 0.0) return true;  // zero direction carries no information
  return top_s_abs_sum(v, s) < 0.5 * total;
}

}  // namespace

bool check_partial_nsp(const Eigen::MatrixXd& a, int s) {
  const long rows = a.rows();
  const long cols = a.cols();
  if (rows > 12 || cols > 4) {
    throw Error("check_partial_nsp: desk-scale limits are rows <= 12, cols <= 4");
  }
  if (s < 0 || s > rows) throw Error("check_partial_nsp: invalid sparsity");
  if (!check_full_rank(a).full_rank || rows < cols) return false;
  if (s == 0) return true;

  // Sign patterns x magnitude grid over coefficient space.
  const double grid[] = {0.25, 0.5, 0.75, 1.0};
  std::vector<Eigen::VectorXd> samples;
  long total = 1;
  for (long j = 0; j < cols; ++j) total *= 9;  // {0, +-0.25, +-0.5, +-0.75, +-1}
  for (long idx = 1; idx < total; ++idx) {
    Eigen::VectorXd w(cols);
    long rest = idx;
    for (long j = 0; j < cols; ++j) {
      const long digit = rest % 9;
      rest /= 9;
      if (digit == 0) {
        w(j) = 0.0;
      } else {
        const double magnitude = grid[(digit - 1) / 2];
        w(j) = (digit % 2 == 1) ? magnitude : -magnitude;
      }
    }
    samples.push_back(std::move(w));
  }
  const CounterRng rng(12345, 7);
  for (int k = 0; k < 10000; ++k) {
    Eigen::VectorXd w(cols);
    for (long j = 0; j < cols; ++j) {
      w(j) = rng.gaussian(static_cast<std::uint64_t>(k) * cols + j);
    }
    samples.push_back(std::move(w));
  }

  for (const auto& w : samples) {
    if (!nsp_holds_for(a, w, s)) return false;
  }
  return true;
}

namespace {

// Lexicographic enumeration of all index subsets of {0..n-1} with |S| = k.
void for_each_subset(long n, int k,
                     const std::function<void(const std::vector<long>&)>& fn) {
  std::vector<long> subset(static_cast<std::size_t>(k));
  std::function<void(long, int)> rec = [&](long start, int depth) {
    if (depth == k) {
      fn(subset);
      return;
    }
    for (long i = start; i <= n - (k - depth); ++i) {
      subset[static_cast<std::size_t>(depth)] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

}  // namespace

OracleResult l1_oracle_equivalence(const Eigen::MatrixXd& phi,
                                   const Eigen::MatrixXd& v, int s,
                                   const SolveConfig& config) {
  const long m = phi.rows();
  const long r = phi.cols();
  if (m > 40 || r > 4 || s > 3 || v.cols() != 1) {
    throw Error("l1_oracle_equivalence: desk-scale limits are m' <= 40, r <= 4, s <= 3, d = 1");
  }
  if (v.rows() != m) throw DimensionError("l1_oracle_equivalence: shape mismatch");

  const double scale = std::max(1.0, v.cwiseAbs().maxCoeff());
  const double feas_tol = 1e-8 * scale;

  bool found = false;
  double best_objective = std::numeric_limits<double>::infinity();
  Eigen::VectorXd best_c;

  for (int k = 0; k <= s; ++k) {
    for_each_subset(m, k, [&](const std::vector<long>& support) {
      std::vector<long> complement;
      complement.reserve(static_cast<std::size_t>(m - k));
      std::size_t si = 0;
      for (long i = 0; i < m; ++i) {
        if (si < support.size() && support[si] == i) {
          ++si;
        } else {
          complement.push_back(i);
        }
      }
      if (static_cast<long>(complement.size()) < r) return;

      Eigen::MatrixXd phi_c(complement.size(), r);
      Eigen::VectorXd v_c(complement.size());
      for (std::size_t i = 0; i < complement.size(); ++i) {
        phi_c.row(static_cast<long>(i)) = phi.row(complement[i]);
        v_c(static_cast<long>(i)) = v(complement[i], 0);
      }
      const Eigen::VectorXd c = phi_c.colPivHouseholderQr().solve(v_c);
      // Exact interpolation on the complement is required for feasibility.
      if ((phi_c * c - v_c).cwiseAbs().maxCoeff() > feas_tol) return;

      const double objective = (v.col(0) - phi * c).cwiseAbs().sum();
      if (objective < best_objective - 1e-12) {
        best_objective = objective;
        best_c = c;
        found = true;
      }
    });
    // Sparsest feasible support wins; larger supports cannot reduce the
    // objective of an exact fit below an already-exact sparser one.
  }
  if (!found) throw Error("l1_oracle_equivalence: no feasible outlier support");

  OracleResult result;
  result.coefficients = best_c;
  result.outliers = v - phi * best_c;
  for (long i = 0; i < m; ++i) {
    if (std::abs(result.outliers(i, 0)) <= feas_tol) result.outliers(i, 0) = 0.0;
  }

  const SolveReport report = solve(phi, v, config);
  result.matched =
      (report.coefficients - result.coefficients).cwiseAbs().maxCoeff() <= 1e-6 &&
      (report.outliers - result.outliers).cwiseAbs().maxCoeff() <= 1e-6;
  return result;
}

}  // namespace recover
