#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include "recover/analysis.hpp"
#include "recover/dynamics.hpp"
#include "recover/preprocess.hpp"
#include "recover/solver.hpp"

namespace recover {

enum class DerivativeMode { first_order, second_order, analytic };

struct CorruptionConfig {
  double fraction = 0.0;
  long b_min = 5;
  long b_max = 50;
  double sigma = 1.0;
  std::uint64_t seed = 1;
};

/// Pass/fail bounds a preset is expected to meet; drives the CLI exit code.
struct Thresholds {
  double max_coeff_error = std::numeric_limits<double>::infinity();
  bool require_exact_detection = false;
  int max_iterations = std::numeric_limits<int>::max();
};

struct ExperimentConfig {
  std::string preset_name;
  /// A named system ("lorenz", "rossler", "hyperchaos") or a path to a
  /// coefficient table file (recognized by containing '/' or '.').
  std::string system = "lorenz";
  Eigen::VectorXd x0;  // empty -> system default
  double dt = 0.0005;
  double t_final = 20.0;
  int basis_degree = 4;
  long burn_in = 0;
  CorruptionConfig corruption;
  double dense_noise_sigma = 0.0;
  DerivativeMode derivative_mode = DerivativeMode::second_order;
  SolveConfig solve;
  int decimation_L = 1;
  std::string output_dir;  // empty -> nothing written
  Thresholds thresholds;
};

struct ExperimentResult {
  SolveReport report;
  Eigen::MatrixXd true_coefficients;
  std::set<long> detected_rows;  // trajectory indices
  std::set<long> truth_rows;     // trajectory indices
  RecoveryScore score;
  double achieved_fraction = 0.0;
  double wall_time_s = 0.0;
  long m = 0;
  int best_class = 0;  // decimation class that was reported
  bool thresholds_met = false;
  std::string report_path;  // set when output_dir was given
};

struct TrialBatteryResult {
  int n_trials = 0;
  int n_exact_detection = 0;
  int n_failures = 0;
  double min_error = std::numeric_limits<double>::infinity();
  double max_error = 0.0;
  std::vector<RecoveryScore> per_trial;
  std::vector<std::string> failure_messages;
};

std::vector<std::string> preset_names();
ExperimentConfig preset(const std::string& name);

ExperimentConfig parse_config_file(const std::string& path);

/// Full pipeline: simulate, corrupt, add dense noise, differentiate, build
/// the dictionary, solve, score. Writes report and plot-data files when
/// output_dir is set.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// n_trials independent corruption/noise seeds (base_seed + trial index)
/// over one shared clean trajectory. Per-trial failures are recorded, not
/// fatal. Worker count is capped by the RECOVER_THREADS environment variable.
TrialBatteryResult run_battery(const ExperimentConfig& config, int n_trials,
                               std::uint64_t base_seed);

struct DecimatedProblem {
  Eigen::MatrixXd phi;
  Eigen::MatrixXd v;
  std::vector<long> rows;  // trajectory indices of each subproblem row
};

/// Splits the solver rows by residue class mod L into L independent
/// subproblems. L must divide the usable row count.
std::vector<DecimatedProblem> decimate(const Trajectory& corrupted,
                                       const DerivativeEstimate& derivative,
                                       const MultiIndexBasis& basis, int L);

/// Resolves ExperimentConfig::system into a coefficient matrix over the
/// config's dictionary degree.
PolynomialSystem resolve_system(const ExperimentConfig& config);

}  // namespace recover
