#pragma once

#include <Eigen/Dense>
#include <string>

#include "recover/basis.hpp"

namespace recover {

/// Uniformly sampled trajectory: row j is the state at time t0 + j*dt.
struct Trajectory {
  Eigen::MatrixXd states;
  double dt = 0.0;
  double t0 = 0.0;

  long rows() const { return states.rows(); }
  int dim() const { return static_cast<int>(states.cols()); }
};

/// Polynomial vector field xdot = f(x); column l of `coefficients` holds the
/// dictionary coefficients of f_l over `basis`.
struct PolynomialSystem {
  MultiIndexBasis basis;
  Eigen::MatrixXd coefficients;  // r x d

  int dim() const { return basis.d; }
};

enum class SystemName { lorenz, rossler, hyperchaos };

SystemName system_name_from_string(const std::string& name);
std::string to_string(SystemName name);

/// The three reference systems with their literature parameter values,
/// embedded in a dictionary of total degree `basis_degree` (>= 2).
PolynomialSystem named_system(SystemName name, int basis_degree);

/// Default initial condition used by the experiment presets.
Eigen::VectorXd default_initial_condition(SystemName name);

Eigen::VectorXd eval_field(const PolynomialSystem& sys, const Eigen::VectorXd& x);

/// Classical fixed-step RK4. Returns n_steps+1 states starting at x0.
/// Throws BlowUpError (with the failing step) if the state norm exceeds 1e6
/// or becomes non-finite. burn_in steps are integrated and discarded first.
Trajectory integrate_rk4(const PolynomialSystem& sys, const Eigen::VectorXd& x0,
                         double dt, long n_steps, double t0 = 0.0,
                         long burn_in = 0);

}  // namespace recover
