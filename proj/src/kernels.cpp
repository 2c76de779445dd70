#include "lagfrac/kernels.hpp"

#include <cmath>
#include <string>

#include "lagfrac/quadrature.hpp"

namespace lagfrac {

FractionalOrder::FractionalOrder(double a) : alpha(a) {
  if (!(a > 0.0))
    throw domain_error("FractionalOrder: alpha > 0 required, got " +
                       std::to_string(a));
  m = int(std::floor(a)) + 1;
}

KernelEval::KernelEval(FractionalOrder o)
    : order(o),
      inv_gamma_two_alpha(std::exp(-ln_gamma(2.0 * o.alpha))),
      psi_alpha(polygamma(0, o.alpha)) {}

KernelEval::KernelEval(double alpha) : KernelEval(FractionalOrder(alpha)) {}

double kernel_hyp2f1(double a, double z, double psi_a) {
  if (z == 0.0) return 1.0;
  // near v = 1 the argument is small; the Gauss series applies directly
  if (z > -0.25) return hyp2f1_gauss_series(a, a, 2.0 * a, z);
  double w = z / (z - 1.0);
  double pref = std::exp(-a * std::log1p(-z));
  if (w < kHyp2f1SwitchW) return pref * hyp2f1_gauss_series(a, a, 2.0 * a, w);
  // u = 1 - w = 1/(1-z), exact in the original variable
  double u = 1.0 / (1.0 - z);
  return pref * hyp2f1_log_case_u(a, a, u, -std::log1p(-z), psi_a, psi_a);
}

double k_plus(const KernelEval& ke, double v) {
  if (!(v > 0.0)) throw domain_error("k_plus: v > 0 required");
  if (v <= 1.0) return 0.0;
  double a = ke.order.alpha;
  return std::pow(v - 1.0, 2.0 * a - 1.0) *
         kernel_hyp2f1(a, 1.0 - v, ke.psi_alpha) * ke.inv_gamma_two_alpha;
}

double k_minus(const KernelEval& ke, double v) {
  if (!(v > 0.0)) throw domain_error("k_minus: v > 0 required");
  if (v >= 1.0) return 0.0;
  double a = ke.order.alpha;
  return std::pow(v, -a) * std::pow(1.0 - v, 2.0 * a - 1.0) *
         kernel_hyp2f1(a, 1.0 - 1.0 / v, ke.psi_alpha) *
         ke.inv_gamma_two_alpha;
}

double c_plus(double alpha, double nu) {
  if (!(alpha > 0.0)) throw domain_error("c_plus: alpha > 0 required");
  if (!(alpha + nu < 1.0))
    throw domain_error("c_plus: alpha + nu < 1 required for convergence");
  KernelEval ke(alpha);
  // head [1,2]: Gauss-Jacobi absorbs (u-1)^{2 alpha - 1}
  auto head_smooth = [&](double u) {
    return kernel_hyp2f1(alpha, 1.0 - u, ke.psi_alpha) *
           ke.inv_gamma_two_alpha * std::pow(u, nu - 1.0);
  };
  double head =
      integrate_jacobi_weighted(head_smooth, 1.0, 2.0, 0.0, 2.0 * alpha - 1.0);
  // tail u = 1/t on (0, 1/2]; integrand ~ t^{-(alpha+nu)} log(1/t) at 0
  auto tail_f = [&](double t) {
    return k_plus(ke, 1.0 / t) * std::pow(t, -nu - 1.0);
  };
  double abs_tol = 1e-12 * (1.0 + std::abs(head));
  double tail =
      integrate_graded_left(tail_f, 0.5, -(alpha + nu), abs_tol, 1e-10, 20000);
  return head + tail;
}

double c_minus(double alpha, double nu) {
  if (!(alpha > 0.0)) throw domain_error("c_minus: alpha > 0 required");
  if (!(nu > 0.0)) throw domain_error("c_minus: nu > 0 required");
  KernelEval ke(alpha);
  auto head_smooth = [&](double u) {
    return std::pow(u, -alpha) * kernel_hyp2f1(alpha, 1.0 - 1.0 / u, ke.psi_alpha) *
           ke.inv_gamma_two_alpha * std::pow(u, nu - 1.0);
  };
  double head =
      integrate_jacobi_weighted(head_smooth, 0.5, 1.0, 2.0 * alpha - 1.0, 0.0);
  auto left_f = [&](double u) {
    return k_minus(ke, u) * std::pow(u, nu - 1.0);
  };
  double abs_tol = 1e-12 * (1.0 + std::abs(head));
  double left = integrate_graded_left(left_f, 0.5, nu - 1.0, abs_tol, 1e-10, 20000);
  return head + left;
}

}  // namespace lagfrac
