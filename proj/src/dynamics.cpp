#include "recover/dynamics.hpp"

#include <cmath>

#include "recover/errors.hpp"

namespace recover {

SystemName system_name_from_string(const std::string& name) {
  if (name == "lorenz") return SystemName::lorenz;
  if (name == "rossler") return SystemName::rossler;
  if (name == "hyperchaos") return SystemName::hyperchaos;
  throw Error("unknown system name '" + name + "'");
}

std::string to_string(SystemName name) {
  switch (name) {
    case SystemName::lorenz: return "lorenz";
    case SystemName::rossler: return "rossler";
    case SystemName::hyperchaos: return "hyperchaos";
  }
  throw Error("unreachable system name");
}

namespace {

long index_of(const MultiIndexBasis& basis, const MultiIndex& alpha) {
  for (long i = 0; i < basis.size(); ++i) {
    if (basis.indices[static_cast<std::size_t>(i)] == alpha) return i;
  }
  throw Error("monomial not present in basis");
}

// Set coefficient of the monomial with the given exponents in equation `eq`.
void set_term(PolynomialSystem& sys, const MultiIndex& alpha, int eq, double value) {
  sys.coefficients(index_of(sys.basis, alpha), eq) = value;
}

}  // namespace

PolynomialSystem named_system(SystemName name, int basis_degree) {
  if (basis_degree < 2) throw Error("named_system: basis_degree must be >= 2");
  const int d = (name == SystemName::hyperchaos) ? 4 : 3;
  PolynomialSystem sys;
  sys.basis = enumerate_basis(d, basis_degree);
  sys.coefficients = Eigen::MatrixXd::Zero(sys.basis.size(), d);

  if (name == SystemName::lorenz) {
    set_term(sys, {1, 0, 0}, 0, -10.0);
    set_term(sys, {0, 1, 0}, 0, 10.0);
    set_term(sys, {1, 0, 0}, 1, 28.0);
    set_term(sys, {0, 1, 0}, 1, -1.0);
    set_term(sys, {1, 0, 1}, 1, -1.0);
    set_term(sys, {0, 0, 1}, 2, -8.0 / 3.0);
    set_term(sys, {1, 1, 0}, 2, 1.0);
  } else if (name == SystemName::rossler) {
    set_term(sys, {0, 1, 0}, 0, -1.0);
    set_term(sys, {0, 0, 1}, 0, -1.0);
    set_term(sys, {1, 0, 0}, 1, 1.0);
    set_term(sys, {0, 1, 0}, 1, 0.2);
    set_term(sys, {0, 0, 0}, 2, 0.2);
    set_term(sys, {0, 0, 1}, 2, -5.7);
    set_term(sys, {1, 0, 1}, 2, 1.0);
  } else {
    set_term(sys, {0, 1, 0, 0}, 0, -1.0);
    set_term(sys, {0, 0, 1, 0}, 0, -1.0);
    set_term(sys, {1, 0, 0, 0}, 1, 1.0);
    set_term(sys, {0, 1, 0, 0}, 1, 0.25);
    set_term(sys, {0, 0, 0, 1}, 1, 1.0);
    set_term(sys, {0, 0, 0, 0}, 2, 3.0);
    set_term(sys, {1, 0, 1, 0}, 2, 1.0);
    set_term(sys, {0, 0, 1, 0}, 3, -0.5);
    set_term(sys, {0, 0, 0, 1}, 3, 0.05);
  }
  return sys;
}

Eigen::VectorXd default_initial_condition(SystemName name) {
  if (name == SystemName::hyperchaos) {
    return Eigen::Vector4d(-10.0, -6.0, 0.0, 10.0);
  }
  return Eigen::Vector3d(1.0, 1.0, 1.0);
}

Eigen::VectorXd eval_field(const PolynomialSystem& sys, const Eigen::VectorXd& x) {
  if (x.size() != sys.dim()) {
    throw DimensionError("eval_field: state length does not match system dimension");
  }
  return (evaluate_monomials(sys.basis, x) * sys.coefficients).transpose();
}

Trajectory integrate_rk4(const PolynomialSystem& sys, const Eigen::VectorXd& x0,
                         double dt, long n_steps, double t0, long burn_in) {
  if (dt <= 0.0) throw Error("integrate_rk4: dt must be positive");
  if (n_steps < 1) throw Error("integrate_rk4: n_steps must be >= 1");
  if (x0.size() != sys.dim()) {
    throw DimensionError("integrate_rk4: x0 length does not match system dimension");
  }

  constexpr double kBlowUpNorm = 1e6;
  auto step = [&](const Eigen::VectorXd& x) {
    const Eigen::VectorXd k1 = eval_field(sys, x);
    const Eigen::VectorXd k2 = eval_field(sys, x + 0.5 * dt * k1);
    const Eigen::VectorXd k3 = eval_field(sys, x + 0.5 * dt * k2);
    const Eigen::VectorXd k4 = eval_field(sys, x + dt * k3);
    return (x + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)).eval();
  };
  auto check = [&](const Eigen::VectorXd& x, long step_index) {
    if (!x.allFinite() || x.norm() > kBlowUpNorm) {
      throw BlowUpError("integrate_rk4: state blew up at step " +
                        std::to_string(step_index), step_index);
    }
  };

  Eigen::VectorXd x = x0;
  for (long i = 0; i < burn_in; ++i) {
    x = step(x);
    check(x, i - burn_in);
  }

  Trajectory traj;
  traj.dt = dt;
  traj.t0 = t0;
  traj.states.resize(n_steps + 1, sys.dim());
  traj.states.row(0) = x.transpose();
  for (long i = 1; i <= n_steps; ++i) {
    x = step(x);
    check(x, i);
    traj.states.row(i) = x.transpose();
  }
  return traj;
}

}  // namespace recover
