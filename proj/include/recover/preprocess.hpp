#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "recover/dynamics.hpp"

namespace recover {

/// Seeded description of interval corruption applied to a trajectory.
struct CorruptionRecord {
  std::uint64_t seed = 0;
  double sigma = 0.0;
  /// (start_index, bandwidth) pairs, clipped to [0, m). Overlaps allowed;
  /// covered rows are counted once.
  std::vector<std::pair<long, long>> intervals;
  /// Additive perturbations; nonzero only on covered rows.
  Eigen::MatrixXd offsets;

  /// Union of all intervals.
  std::set<long> covered_rows() const;
  double covered_fraction() const {
    return offsets.rows() > 0
               ? static_cast<double>(covered_rows().size()) /
                     static_cast<double>(offsets.rows())
               : 0.0;
  }
};

/// Finite-difference derivative estimate. Row k approximates the derivative
/// at trajectory index k + first_index.
struct DerivativeEstimate {
  Eigen::MatrixXd values;
  long first_index = 0;
  int order = 0;

  long rows() const { return values.rows(); }
};

/// Forward differences (x(t+dt) - x(t)) / dt on rows 0..m-2.
DerivativeEstimate diff_first_order(const Trajectory& traj);

/// Central differences (x(t+dt) - x(t-dt)) / (2 dt) on rows 1..m-2.
DerivativeEstimate diff_second_order(const Trajectory& traj);

/// Draws random intervals (uniform starts, uniform bandwidths in
/// [b_min, b_max]) until the covered row fraction first reaches
/// fraction_target, then adds iid Gaussian(0, sigma^2) offsets on covered
/// rows. Deterministic given the seed.
std::pair<Trajectory, CorruptionRecord> corrupt(const Trajectory& traj,
                                                double fraction_target,
                                                long b_min, long b_max,
                                                double sigma,
                                                std::uint64_t seed);

/// Perturbs every entry by iid Gaussian(0, sigma^2); deterministic per
/// (seed, row, column).
Trajectory add_dense_noise(const Trajectory& traj, double sigma,
                           std::uint64_t seed);

/// Trajectory-index rows (within the derivative's valid range) where the
/// corruption changes the residual V - Phi(X)*C_true, i.e. the exact nonzero
/// support of the true outlier matrix. Corruption on trajectory row j
/// propagates to the derivative rows whose stencil touches j.
std::set<long> ground_truth_outlier_rows(const CorruptionRecord& record,
                                         const PolynomialSystem& sys,
                                         const Trajectory& corrupted,
                                         const DerivativeEstimate& derivative);

}  // namespace recover
