#pragma once

#include <functional>

#include <Eigen/Dense>

namespace qhad {

using ResidualFunction = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

struct LeastSquaresOptions {
  double initial_damping = 1e-3;
  double damping_factor = 10.0;  ///< multiply on a rejected step, divide on an accepted one
  int max_iterations = 500;
  double tolerance = 1e-8;  ///< stop once ||f(x)|| <= tolerance
  double jacobian_step = 1e-6;
};

struct LeastSquaresResult {
  Eigen::VectorXd x;
  double residual_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Central-difference Jacobian of f at x.
Eigen::MatrixXd numerical_jacobian(const ResidualFunction& f, const Eigen::VectorXd& x,
                                   double step = 1e-6);

/// Levenberg-style damped Gauss-Newton: solves (JᵀJ + λI) δ = -Jᵀ f, accepting
/// the step only if ||f|| decreases. Works for under-determined systems.
LeastSquaresResult damped_least_squares(const ResidualFunction& f, Eigen::VectorXd x0,
                                        const LeastSquaresOptions& options = {});

}  // namespace qhad
