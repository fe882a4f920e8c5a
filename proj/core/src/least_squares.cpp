#include "qhad/least_squares.hpp"

#include <algorithm>
#include <cmath>

namespace qhad {

Eigen::MatrixXd numerical_jacobian(const ResidualFunction& f, const Eigen::VectorXd& x,
                                   double step) {
  Eigen::VectorXd probe = x;
  Eigen::MatrixXd jac;
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    probe(k) = x(k) + step;
    const Eigen::VectorXd up = f(probe);
    probe(k) = x(k) - step;
    const Eigen::VectorXd down = f(probe);
    probe(k) = x(k);
    if (k == 0) {
      jac.resize(up.size(), x.size());
    }
    jac.col(k) = (up - down) / (2.0 * step);
  }
  return jac;
}

LeastSquaresResult damped_least_squares(const ResidualFunction& f, Eigen::VectorXd x0,
                                        const LeastSquaresOptions& options) {
  LeastSquaresResult result;
  result.x = std::move(x0);
  Eigen::VectorXd r = f(result.x);
  result.residual_norm = r.norm();

  double damping = options.initial_damping;
  Eigen::MatrixXd jac = numerical_jacobian(f, result.x, options.jacobian_step);

  while (result.residual_norm > options.tolerance && result.iterations < options.max_iterations) {
    ++result.iterations;
    Eigen::MatrixXd normal = jac.transpose() * jac;
    normal.diagonal().array() += damping;
    const Eigen::VectorXd step = normal.ldlt().solve(-jac.transpose() * r);
    const Eigen::VectorXd candidate = result.x + step;
    const Eigen::VectorXd r_new = f(candidate);
    const double norm_new = r_new.norm();

    if (std::isfinite(norm_new) && norm_new < result.residual_norm) {
      result.x = candidate;
      r = r_new;
      result.residual_norm = norm_new;
      damping = std::max(damping / options.damping_factor, 1e-15);
      jac = numerical_jacobian(f, result.x, options.jacobian_step);
    } else {
      damping *= options.damping_factor;
      if (damping > 1e16 || step.norm() <= 1e-16 * (1.0 + result.x.norm())) {
        break;  // stalled
      }
    }
  }
  result.converged = result.residual_norm <= options.tolerance;
  return result;
}

}  // namespace qhad
