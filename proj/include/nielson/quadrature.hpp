#pragma once

#include <functional>

#include <Eigen/Core>

namespace nielson {

/// Adaptive Gauss-Legendre quadrature: 15-point panels, recursive bisection,
/// absolute error target. Throws QuadratureNonConvergence past the depth limit.
struct QuadratureOptions {
  double tol = 1e-12;
  int max_depth = 40;
};

using VectorIntegrand = std::function<Eigen::VectorXd(double)>;
using VectorIntegrand2 = std::function<Eigen::VectorXd(double, double)>;

/// Integral of a vector-valued f over [a, b]; every component meets the tolerance.
Eigen::VectorXd integrate(const VectorIntegrand& f, double a, double b,
                          const QuadratureOptions& opt = {});

double integrate_scalar(const std::function<double(double)>& f, double a, double b,
                        const QuadratureOptions& opt = {});

/// Integral over {0 <= x <= beta, 0 <= y <= beta - x} as nested 1-D rules (inner in y).
Eigen::VectorXd integrate_triangle(const VectorIntegrand2& f, double beta,
                                   const QuadratureOptions& opt = {});

}  // namespace nielson
