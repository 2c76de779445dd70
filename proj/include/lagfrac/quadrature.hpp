#pragma once

#include <Eigen/Core>
#include <cmath>
#include <complex>
#include <queue>
#include <type_traits>
#include <vector>

#include "lagfrac/errors.hpp"

namespace lagfrac {

struct QuadRule {
  Eigen::ArrayXd nodes;    // on (-1, 1)
  Eigen::ArrayXd weights;
};

/// Gauss-Legendre rule of order n (cached).
const QuadRule& legendre_rule(int n);

/// Gauss-Jacobi rule of order n for the weight (1-x)^a (1+x)^b on [-1,1]
/// (cached).  Requires a, b > -1.
const QuadRule& jacobi_rule(int n, double a, double b);

namespace detail {
template <class T>
double err_norm(const T& v) {
  if constexpr (std::is_same_v<T, std::complex<double>>)
    return std::abs(v);
  else
    return std::abs(double(v));
}
}  // namespace detail

/// Fixed Gauss-Legendre evaluation of f on [lo, hi].
template <class F>
auto gauss_fixed(F&& f, double lo, double hi, int n) {
  const QuadRule& r = legendre_rule(n);
  double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  using R = std::invoke_result_t<F, double>;
  R acc{};
  for (int i = 0; i < r.nodes.size(); ++i)
    acc += R(r.weights[i] * 1.0) * f(mid + half * r.nodes[i]);
  return R(acc * half);
}

/// int_lo^hi (hi-x)^a (x-lo)^b f(x) dx with f the smooth factor; the order
/// is doubled until two estimates agree.
template <class F>
auto integrate_jacobi_weighted(F&& f, double lo, double hi, double a, double b,
                               double rel_tol = 1e-11, int n_start = 16,
                               int n_cap = 512) {
  using R = std::invoke_result_t<F, double>;
  double half = 0.5 * (hi - lo);
  double scale = std::pow(half, a + b + 1.0);
  auto eval = [&](int n) {
    const QuadRule& r = jacobi_rule(n, a, b);
    R acc{};
    for (int i = 0; i < r.nodes.size(); ++i)
      acc += R(r.weights[i] * 1.0) * f(lo + half * (r.nodes[i] + 1.0));
    return R(acc * scale);
  };
  R prev = eval(n_start);
  for (int n = 2 * n_start; n <= n_cap; n *= 2) {
    R cur = eval(n);
    if (detail::err_norm(R(cur - prev)) <=
        rel_tol * std::max(1e-300, detail::err_norm(cur)))
      return cur;
    prev = cur;
  }
  throw convergence_error("integrate_jacobi_weighted: no convergence");
}

/// Globally adaptive Gauss integration (GL15 with a GL7 error estimate,
/// worst-panel-first refinement).  Works for real and complex integrands.
template <class F>
auto integrate_adaptive(F&& f, double lo, double hi, double abs_tol,
                        double rel_tol = 1e-10, int max_panels = 4000) {
  using R = std::invoke_result_t<F, double>;
  struct Panel {
    double lo, hi, err;
    R value;
    bool operator<(const Panel& o) const { return err < o.err; }
  };
  auto make_panel = [&](double a, double b) {
    R i15 = gauss_fixed(f, a, b, 15);
    R i7 = gauss_fixed(f, a, b, 7);
    return Panel{a, b, detail::err_norm(R(i15 - i7)), i15};
  };
  std::priority_queue<Panel> heap;
  // seed with two panels so a symmetric integrand cannot fool the estimate
  double mid = 0.5 * (lo + hi);
  heap.push(make_panel(lo, mid));
  heap.push(make_panel(mid, hi));
  R total = heap.top().value;
  {  // recompute cleanly
    total = R{};
    std::vector<Panel> tmp;
    while (!heap.empty()) { tmp.push_back(heap.top()); heap.pop(); }
    for (auto& p : tmp) { total += p.value; heap.push(p); }
  }
  double err_total = 0.0;
  {
    std::vector<Panel> tmp;
    while (!heap.empty()) { tmp.push_back(heap.top()); heap.pop(); }
    for (auto& p : tmp) { err_total += p.err; heap.push(p); }
  }
  int n_panels = 2;
  while (err_total > std::max(abs_tol, rel_tol * detail::err_norm(total))) {
    if (n_panels >= max_panels)
      throw convergence_error("integrate_adaptive: panel budget exhausted");
    Panel worst = heap.top();
    heap.pop();
    total -= worst.value;
    err_total -= worst.err;
    double m = 0.5 * (worst.lo + worst.hi);
    if (m == worst.lo || m == worst.hi) {
      // interval at double resolution; accept its value as-is
      total += worst.value;
      heap.push(Panel{worst.lo, worst.hi, 0.0, worst.value});
      continue;
    }
    Panel left = make_panel(worst.lo, m), right = make_panel(m, worst.hi);
    total += left.value + right.value;
    err_total += left.err + right.err;
    heap.push(left);
    heap.push(right);
    ++n_panels;
  }
  return total;
}

/// int_0^B f(t) dt where f behaves like t^sigma (times slowly varying log
/// factors) at t = 0, sigma > -1.  A power substitution flattens the
/// algebraic part before adaptive integration.
template <class F>
auto integrate_graded_left(F&& f, double B, double sigma, double abs_tol,
                           double rel_tol = 1e-10, int max_panels = 4000) {
  if (!(sigma > -1.0))
    throw domain_error("integrate_graded_left: endpoint exponent <= -1");
  double q = (sigma >= 0.0) ? 2.0 : std::max(2.0, 1.5 / (1.0 + sigma));
  auto g = [&](double s) {
    double t = B * std::pow(s, q);
    return f(t) * (B * q * std::pow(s, q - 1.0));
  };
  return integrate_adaptive(g, 0.0, 1.0, abs_tol, rel_tol, max_panels);
}

}  // namespace lagfrac
