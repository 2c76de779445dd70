#include "lagfrac/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace lagfrac {

GridFunction GridFunction::graded(int n, double length, double grading) {
  if (n < 2) throw domain_error("GridFunction: need at least 2 nodes");
  if (!(length > 0.0)) throw domain_error("GridFunction: length must be > 0");
  if (!(grading >= 1.0)) throw domain_error("GridFunction: grading must be >= 1");
  GridFunction g;
  g.length = length;
  g.grading = grading;
  g.nodes.resize(n);
  g.values = Eigen::ArrayXd::Zero(n);
  for (int i = 0; i < n; ++i)
    g.nodes[i] = length * std::pow(double(i + 1) / n, grading);
  return g;
}

CubicSpline::CubicSpline(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y) {
  int n = int(x.size());
  if (n < 2 || y.size() != n)
    throw domain_error("CubicSpline: need matching arrays with >= 2 points");
  for (int i = 0; i + 1 < n; ++i)
    if (!(x[i] < x[i + 1]))
      throw domain_error("CubicSpline: nodes must be strictly increasing");
  x_ = x;
  y_ = y;
  m_ = Eigen::ArrayXd::Zero(n);
  if (n == 2) return;  // linear
  std::vector<double> h(n - 1);
  for (int i = 0; i + 1 < n; ++i) h[i] = x[i + 1] - x[i];
  if (n == 3) {
    // single interior equation, natural ends
    double d = 6.0 * ((y[2] - y[1]) / h[1] - (y[1] - y[0]) / h[0]);
    m_[1] = d / (2.0 * (h[0] + h[1]));
    return;
  }
  // Interior equations i = 1..n-2 with not-a-knot ends folded in; unknowns
  // M_1..M_{n-2}, then M_0 and M_{n-1} are recovered.
  int m = n - 2;
  std::vector<double> sub(m, 0.0), diag(m, 0.0), sup(m, 0.0), rhs(m, 0.0);
  for (int i = 1; i <= n - 2; ++i) {
    int r = i - 1;
    sub[r] = h[i - 1];
    diag[r] = 2.0 * (h[i - 1] + h[i]);
    sup[r] = h[i];
    rhs[r] = 6.0 * ((y[i + 1] - y[i]) / h[i] - (y[i] - y[i - 1]) / h[i - 1]);
  }
  // left: M_0 = (1 + h0/h1) M_1 - (h0/h1) M_2
  diag[0] += sub[0] * (1.0 + h[0] / h[1]);
  sup[0] -= sub[0] * h[0] / h[1];
  sub[0] = 0.0;
  // right: M_{n-1} = (1 + h_{n-2}/h_{n-3}) M_{n-2} - (h_{n-2}/h_{n-3}) M_{n-3}
  double rr = h[n - 2] / h[n - 3];
  diag[m - 1] += sup[m - 1] * (1.0 + rr);
  sub[m - 1] -= sup[m - 1] * rr;
  sup[m - 1] = 0.0;
  // Thomas
  for (int r = 1; r < m; ++r) {
    double w = sub[r] / diag[r - 1];
    diag[r] -= w * sup[r - 1];
    rhs[r] -= w * rhs[r - 1];
  }
  m_[n - 2] = rhs[m - 1] / diag[m - 1];
  for (int r = m - 2; r >= 0; --r)
    m_[r + 1] = (rhs[r] - sup[r] * m_[r + 2]) / diag[r];
  m_[0] = (1.0 + h[0] / h[1]) * m_[1] - (h[0] / h[1]) * m_[2];
  m_[n - 1] = (1.0 + rr) * m_[n - 2] - rr * m_[n - 3];
}

int CubicSpline::segment(double x) const {
  int n = int(x_.size());
  if (x <= x_[0]) return 0;
  if (x >= x_[n - 1]) return n - 2;
  const double* beg = x_.data();
  int i = int(std::upper_bound(beg, beg + n, x) - beg) - 1;
  return std::min(std::max(i, 0), n - 2);
}

double CubicSpline::operator()(double x) const {
  int i = segment(x);
  double h = x_[i + 1] - x_[i];
  double a = x_[i + 1] - x, b = x - x_[i];
  return m_[i] * a * a * a / (6.0 * h) + m_[i + 1] * b * b * b / (6.0 * h) +
         (y_[i] / h - m_[i] * h / 6.0) * a +
         (y_[i + 1] / h - m_[i + 1] * h / 6.0) * b;
}

double CubicSpline::derivative(double x) const {
  int i = segment(x);
  double h = x_[i + 1] - x_[i];
  double a = x_[i + 1] - x, b = x - x_[i];
  return -m_[i] * a * a / (2.0 * h) + m_[i + 1] * b * b / (2.0 * h) +
         (y_[i + 1] - y_[i]) / h - (m_[i + 1] - m_[i]) * h / 6.0;
}

double weighted_lp_norm(const GridFunction& g, double nu, double p) {
  if (!(p >= 1.0)) throw domain_error("weighted_lp_norm: p must be >= 1");
  auto phi = [&](int i) {
    return std::pow(std::abs(g.values[i]), p) *
           std::pow(g.nodes[i], nu * p - 1.0);
  };
  double acc = 0.0;
  for (int i = 0; i + 1 < g.size(); ++i)
    acc += 0.5 * (phi(i) + phi(i + 1)) * (g.nodes[i + 1] - g.nodes[i]);
  return std::pow(acc, 1.0 / p);
}

}  // namespace lagfrac
