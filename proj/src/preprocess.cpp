#include "recover/preprocess.hpp"

#include <algorithm>
#include <cmath>

#include "recover/errors.hpp"
#include "recover/rng.hpp"

namespace recover {

std::set<long> CorruptionRecord::covered_rows() const {
  std::set<long> rows;
  for (const auto& [start, bandwidth] : intervals) {
    for (long j = start; j < start + bandwidth; ++j) rows.insert(j);
  }
  return rows;
}

DerivativeEstimate diff_first_order(const Trajectory& traj) {
  const long m = traj.rows();
  if (m < 2) throw DimensionError("diff_first_order: need at least 2 samples");
  DerivativeEstimate est;
  est.order = 1;
  est.first_index = 0;
  est.values = (traj.states.bottomRows(m - 1) - traj.states.topRows(m - 1)) / traj.dt;
  return est;
}

DerivativeEstimate diff_second_order(const Trajectory& traj) {
  const long m = traj.rows();
  if (m < 3) throw DimensionError("diff_second_order: need at least 3 samples");
  DerivativeEstimate est;
  est.order = 2;
  est.first_index = 1;
  est.values = (traj.states.bottomRows(m - 2) - traj.states.topRows(m - 2)) / (2.0 * traj.dt);
  return est;
}

std::pair<Trajectory, CorruptionRecord> corrupt(const Trajectory& traj,
                                                double fraction_target,
                                                long b_min, long b_max,
                                                double sigma,
                                                std::uint64_t seed) {
  const long m = traj.rows();
  const int d = traj.dim();
  if (sigma < 0.0) throw Error("corrupt: sigma must be non-negative");
  if (b_min > b_max) throw Error("corrupt: b_min must be <= b_max");
  if (fraction_target < 0.0 || fraction_target >= 1.0) {
    throw Error("corrupt: fraction_target must lie in [0, 1)");
  }
  if (fraction_target > 0.0 && b_min > m) {
    throw Error("corrupt: target fraction unreachable, b_min exceeds trajectory length");
  }

  CorruptionRecord record;
  record.seed = seed;
  record.sigma = sigma;
  record.offsets = Eigen::MatrixXd::Zero(m, d);

  const CounterRng interval_rng(seed, 1);
  const CounterRng noise_rng(seed, 2);

  std::vector<char> covered(static_cast<std::size_t>(m), 0);
  long n_covered = 0;
  std::uint64_t draw = 0;
  const std::uint64_t max_draws = static_cast<std::uint64_t>(m) * 10 + 1000;
  while (static_cast<double>(n_covered) < fraction_target * static_cast<double>(m)) {
    if (draw >= max_draws) {
      throw Error("corrupt: target fraction not reached after " +
                  std::to_string(max_draws) + " interval draws");
    }
    const long start = interval_rng.uniform_int(2 * draw, 0, m - 1);
    long bandwidth = interval_rng.uniform_int(2 * draw + 1, b_min, b_max);
    ++draw;
    bandwidth = std::min(bandwidth, m - start);  // clip to [0, m)
    record.intervals.emplace_back(start, bandwidth);
    for (long j = start; j < start + bandwidth; ++j) {
      if (!covered[static_cast<std::size_t>(j)]) {
        covered[static_cast<std::size_t>(j)] = 1;
        ++n_covered;
      }
    }
  }

  for (long j = 0; j < m; ++j) {
    if (!covered[static_cast<std::size_t>(j)]) continue;
    for (int c = 0; c < d; ++c) {
      record.offsets(j, c) =
          sigma * noise_rng.gaussian(static_cast<std::uint64_t>(j) * d + c);
    }
  }

  Trajectory corrupted = traj;
  corrupted.states += record.offsets;
  return {std::move(corrupted), std::move(record)};
}

Trajectory add_dense_noise(const Trajectory& traj, double sigma,
                           std::uint64_t seed) {
  if (sigma < 0.0) throw Error("add_dense_noise: sigma must be non-negative");
  Trajectory noisy = traj;
  if (sigma == 0.0) return noisy;
  const CounterRng rng(seed, 3);
  const int d = traj.dim();
  for (long j = 0; j < traj.rows(); ++j) {
    for (int c = 0; c < d; ++c) {
      noisy.states(j, c) +=
          sigma * rng.gaussian(static_cast<std::uint64_t>(j) * d + c);
    }
  }
  return noisy;
}

std::set<long> ground_truth_outlier_rows(const CorruptionRecord& record,
                                         const PolynomialSystem& sys,
                                         const Trajectory& corrupted,
                                         const DerivativeEstimate& derivative) {
  const long mp = derivative.rows();
  const long first = derivative.first_index;
  if (record.offsets.rows() != corrupted.rows()) {
    throw DimensionError("ground_truth_outlier_rows: record/trajectory shape mismatch");
  }

  Trajectory clean = corrupted;
  clean.states -= record.offsets;
  const DerivativeEstimate clean_derivative =
      derivative.order == 1 ? diff_first_order(clean) : diff_second_order(clean);

  // The corruption's contribution to the residual V - Phi(X) C_true; the
  // clean-data truncation error cancels in the difference.
  const Eigen::MatrixXd residual_dirty =
      derivative.values -
      build_dictionary(sys.basis, corrupted.states.middleRows(first, mp)) *
          sys.coefficients;
  const Eigen::MatrixXd residual_clean =
      clean_derivative.values -
      build_dictionary(sys.basis, clean.states.middleRows(first, mp)) *
          sys.coefficients;
  const Eigen::MatrixXd delta = residual_dirty - residual_clean;

  const double scale = std::max(1.0, derivative.values.cwiseAbs().maxCoeff());
  std::set<long> rows;
  for (long k = 0; k < mp; ++k) {
    if (delta.row(k).cwiseAbs().maxCoeff() > 1e-8 * scale) rows.insert(k + first);
  }
  return rows;
}

}  // namespace recover
