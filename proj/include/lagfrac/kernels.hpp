#pragma once

#include "lagfrac/specfun.hpp"

namespace lagfrac {

/// Fractional order alpha > 0 with the derived integer m = floor(alpha) + 1,
/// so that m - 1 <= alpha < m.
struct FractionalOrder {
  double alpha;
  int m;

  explicit FractionalOrder(double a);
};

/// Per-order cache shared by the kernel evaluations: the 1/Gamma(2 alpha)
/// prefactor and the digamma seed consumed by the logarithmic 2F1 branch.
/// Immutable after construction.
struct KernelEval {
  FractionalOrder order;
  double inv_gamma_two_alpha;
  double psi_alpha;

  explicit KernelEval(double alpha);
  explicit KernelEval(FractionalOrder o);
};

/// 2F1(a,a;2a;z) for z < 1 with a precomputed psi(a) seed; the workhorse
/// behind both kernels.
double kernel_hyp2f1(double a, double z, double psi_a);

/// k_plus(v) = (v-1)_+^{2a-1} 2F1(a,a;2a;1-v) / Gamma(2a); zero for v <= 1.
double k_plus(const KernelEval& ke, double v);

/// k_minus(v) = v^-a (1-v)_+^{2a-1} 2F1(a,a;2a;1-1/v) / Gamma(2a); zero for
/// v >= 1.
double k_minus(const KernelEval& ke, double v);

/// C+ = int_1^inf k_plus(u) u^{nu-1} du, finite for alpha + nu < 1.
double c_plus(double alpha, double nu);

/// C- = int_0^1 k_minus(u) u^{nu-1} du, finite for nu > 0.
double c_minus(double alpha, double nu);

}  // namespace lagfrac
