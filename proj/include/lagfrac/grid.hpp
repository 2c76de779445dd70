#pragma once

#include <Eigen/Core>

#include "lagfrac/errors.hpp"

namespace lagfrac {

/// Samples on the graded mesh x_i = l (i/N)^grading, i = 1..N.  The mesh
/// clusters toward 0 where the operator kernels are singular.
struct GridFunction {
  Eigen::ArrayXd nodes;
  Eigen::ArrayXd values;
  double length = 1.0;
  double grading = 2.0;

  int size() const { return int(nodes.size()); }

  /// Graded mesh with zero-initialized values.
  static GridFunction graded(int n, double length, double grading);
};

/// Cubic spline interpolant with not-a-knot end conditions; evaluation
/// outside [x_1, x_N] continues the boundary cubics.
class CubicSpline {
 public:
  CubicSpline() = default;
  CubicSpline(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y);

  double operator()(double x) const;
  double derivative(double x) const;

 private:
  Eigen::ArrayXd x_, y_, m_;  // m_: second derivatives at the nodes
  int segment(double x) const;
};

/// Discrete weighted norm (int |f|^p x^{nu p - 1} dx)^{1/p} by the
/// trapezoid rule on the grid's own nodes, 1 <= p < inf.
double weighted_lp_norm(const GridFunction& g, double nu, double p);

}  // namespace lagfrac
