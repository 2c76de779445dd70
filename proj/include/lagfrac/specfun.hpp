#pragma once

#include <complex>

#include "lagfrac/errors.hpp"

namespace lagfrac {

using Complex = std::complex<double>;

// ---------------------------------------------------------------------------
// Gamma family
// ---------------------------------------------------------------------------

/// Principal-branch log-gamma.  Relative accuracy ~1e-14 for |z| <= 1e3.
/// Throws pole_error at z = 0, -1, -2, ...
Complex ln_gamma(Complex z);

/// Real-argument log-gamma, x > 0 (throws domain_error otherwise).
double ln_gamma(double x);

/// (Gamma(num)/Gamma(den))^2 through log-gamma differences, so the ratio is
/// finite even where the raw gammas overflow.  If both arguments sit on
/// poles the limit (den_k!/num_k!)^2 is returned; a lone pole in `num`
/// throws pole_error, a lone pole in `den` gives 0.
Complex gamma_ratio_sq(Complex num, Complex den);

// ---------------------------------------------------------------------------
// Gauss hypergeometric 2F1 on the real line left of z = 1
// ---------------------------------------------------------------------------

struct Hyp2F1Params {
  double a = 0, b = 0, c = 0;
  double z = 0;  // must satisfy z < 1
};

/// 2F1(a,b;c;z) for z < 1.  Arguments z <= 0 are mapped by the Pfaff
/// transform w = z/(z-1) into [0,1); below the switch threshold the Gauss
/// series is summed, above it the logarithmic c = a+b expansion is used
/// (the kernel case a = b = alpha, c = 2*alpha always satisfies c = a+b).
double gauss_2f1(const Hyp2F1Params& p);
double gauss_2f1(double a, double b, double c, double z);

/// Series/log-case switch point in the transformed variable w.
inline constexpr double kHyp2f1SwitchW = 0.75;
/// Term cap shared by all hypergeometric-type series.
inline constexpr int kSeriesTermCap = 10000;

/// Plain Gauss series at argument w, |w| < 1.  Exposed so the two branches
/// can be compared against each other at the switch point.
double hyp2f1_gauss_series(double a, double b, double c, double w);

/// Logarithmic expansion of 2F1(a,b;a+b;w) around w = 1, valid 0 < w < 1.
/// psi_a/psi_b may pass precomputed digamma values of a and b.
double hyp2f1_log_case(double a, double b, double w, double psi_a,
                       double psi_b);
double hyp2f1_log_case(double a, double b, double w);

/// Same expansion parameterized by u = 1-w together with ln(u), for callers
/// that know u without cancellation (e.g. u = 1/(1-z) after the Pfaff map).
double hyp2f1_log_case_u(double a, double b, double u, double log_u,
                         double psi_a, double psi_b);

// ---------------------------------------------------------------------------
// Polygamma
// ---------------------------------------------------------------------------

/// psi^(n)(x) for n >= 0.  x may be any non-pole real (negative non-integer
/// arguments are lifted by the upward recurrence); poles at x = 0, -1, ...
double polygamma(int n, double x);

// ---------------------------------------------------------------------------
// Stirling functions of fractional order
// ---------------------------------------------------------------------------

/// k-th Taylor coefficient at u = 0 of Gamma(u+1)/Gamma(u+1-alpha).
/// Integer alpha uses the classical signed Stirling-number recurrence,
/// fractional alpha the exp-composition of polygamma-generated series.
double stirling_s(double alpha, int k);

/// c_k(alpha) = sum_j s(alpha,j) s(alpha,k-j).
double cauchy_ck(double alpha, int k);

}  // namespace lagfrac
