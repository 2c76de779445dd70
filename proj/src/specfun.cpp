#include "lagfrac/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace lagfrac {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLogPi = 1.1447298858494001741;
constexpr double kHalfLogTwoPi = 0.91893853320467274178;

// Lanczos g = 7, 9-term coefficient set; ~1e-14 relative over the right
// half-plane in double precision.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

bool is_pole(Complex z) {
  return z.imag() == 0.0 && is_nonpositive_integer(z.real());
}

Complex lanczos_right(Complex z) {  // Re z >= 0.5
  Complex zz = z - 1.0;
  Complex s(kLanczos[0], 0.0);
  for (int i = 1; i < 9; ++i) s += kLanczos[i] / (zz + double(i));
  Complex base = zz + (kLanczosG + 0.5);
  return kHalfLogTwoPi + (zz + 0.5) * std::log(base) - base + std::log(s);
}

double lanczos_right(double x) {  // x >= 0.5
  double xx = x - 1.0;
  double s = kLanczos[0];
  for (int i = 1; i < 9; ++i) s += kLanczos[i] / (xx + double(i));
  double base = xx + kLanczosG + 0.5;
  return kHalfLogTwoPi + (xx + 0.5) * std::log(base) - base + std::log(s);
}

// sin(pi x) with argument reduction; exact zeros at integers.
double sin_pi(double x) {
  double m = std::floor(x);
  double r = x - m;
  double s = std::sin(kPi * r);
  return (std::fmod(m, 2.0) != 0.0) ? -s : s;
}

}  // namespace

double ln_gamma(double x) {
  if (is_nonpositive_integer(x))
    throw pole_error("ln_gamma: pole at x = " + std::to_string(x));
  if (x <= 0.0)
    throw domain_error("ln_gamma(double): requires x > 0, got " +
                       std::to_string(x));
  if (x >= 0.5) return lanczos_right(x);
  return kLogPi - std::log(std::sin(kPi * x)) - lanczos_right(1.0 - x);
}

Complex ln_gamma(Complex z) {
  if (is_pole(z))
    throw pole_error("ln_gamma: pole at z = " + std::to_string(z.real()));
  if (z.imag() == 0.0) {
    double x = z.real();
    if (x >= 0.5) return Complex(lanczos_right(x), 0.0);
    // Reflection on the real axis; the branch on the cut is the limit from
    // the upper half-plane, Im = -pi * ceil(-x).
    double re = kLogPi - std::log(std::abs(sin_pi(x))) - lanczos_right(1.0 - x);
    double im = -kPi * std::ceil(-x);
    return Complex(re, im);
  }
  if (z.imag() < 0.0) return std::conj(ln_gamma(std::conj(z)));
  if (z.real() >= 0.5) return lanczos_right(z);
  // Im z > 0, Re z < 0.5: reflection with the analytic log of sin(pi z),
  // written through exp(2 i pi z) (modulus < 1, no overflow) plus the
  // constant -i pi that makes the result the principal branch.
  const Complex i_pi(0.0, kPi);
  Complex log_sin = -i_pi * z - Complex(std::log(2.0), kPi / 2.0) +
                    std::log(1.0 - std::exp(2.0 * i_pi * z));
  return kLogPi - log_sin - lanczos_right(1.0 - z) - Complex(0.0, kPi);
}

Complex gamma_ratio_sq(Complex num, Complex den) {
  if (num == den) return Complex(1.0, 0.0);
  bool pn = is_pole(num), pd = is_pole(den);
  if (pn && pd) {
    // Gamma(-p+e)/Gamma(-q+e) -> (-1)^{p-q} q!/p!; the square drops the sign.
    double p = -num.real(), q = -den.real();
    return std::exp(2.0 * (lanczos_right(q + 1.0) - lanczos_right(p + 1.0)));
  }
  if (pn)
    throw pole_error("gamma_ratio_sq: numerator pole at z = " +
                     std::to_string(num.real()));
  if (pd) return Complex(0.0, 0.0);
  return std::exp(2.0 * (ln_gamma(num) - ln_gamma(den)));
}

// ---------------------------------------------------------------------------
// 2F1
// ---------------------------------------------------------------------------

double hyp2f1_gauss_series(double a, double b, double c, double w) {
  double term = 1.0, sum = 1.0;
  int quiet = 0;
  for (int k = 0; k < kSeriesTermCap; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * w;
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) {
      if (++quiet >= 2) return sum;
    } else {
      quiet = 0;
    }
  }
  throw convergence_error("hyp2f1_gauss_series: term cap reached at w = " +
                          std::to_string(w));
}

namespace {

// 2F1(a,b;a+b;w) by the logarithmic expansion in u = 1-w.  log_u is
// ln(1-w) supplied by the caller (computable without cancellation when w
// came through the Pfaff map).
double hyp2f1_log_core(double a, double b, double u, double log_u,
                       double psi_a, double psi_b) {
  double pref = std::exp(ln_gamma(a + b) - ln_gamma(a) - ln_gamma(b));
  double coef = 1.0;       // (a)_n (b)_n / (n!)^2 * u^n
  double psi_n1 = -0.57721566490153286061;  // psi(1)
  double pa = psi_a, pb = psi_b;
  double sum = 0.0;
  int quiet = 0;
  for (int n = 0; n < kSeriesTermCap; ++n) {
    double bracket = 2.0 * psi_n1 - pa - pb - log_u;
    double term = coef * bracket;
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum) && n > 2) {
      if (++quiet >= 2) return pref * sum;
    } else {
      quiet = 0;
    }
    coef *= (a + n) * (b + n) / ((n + 1.0) * (n + 1.0)) * u;
    psi_n1 += 1.0 / (n + 1.0);
    pa += 1.0 / (a + n);
    pb += 1.0 / (b + n);
  }
  throw convergence_error("hyp2f1_log_case: term cap reached");
}

}  // namespace

double hyp2f1_log_case(double a, double b, double w, double psi_a,
                       double psi_b) {
  if (w <= 0.0 || w >= 1.0)
    throw domain_error("hyp2f1_log_case: w must lie in (0,1)");
  return hyp2f1_log_core(a, b, 1.0 - w, std::log1p(-w), psi_a, psi_b);
}

double hyp2f1_log_case(double a, double b, double w) {
  return hyp2f1_log_case(a, b, w, polygamma(0, a), polygamma(0, b));
}

double hyp2f1_log_case_u(double a, double b, double u, double log_u,
                         double psi_a, double psi_b) {
  if (!(u > 0.0 && u < 1.0))
    throw domain_error("hyp2f1_log_case_u: u must lie in (0,1)");
  return hyp2f1_log_core(a, b, u, log_u, psi_a, psi_b);
}

double gauss_2f1(const Hyp2F1Params& p) {
  return gauss_2f1(p.a, p.b, p.c, p.z);
}

double gauss_2f1(double a, double b, double c, double z) {
  if (is_nonpositive_integer(c))
    throw domain_error("gauss_2f1: c must not be a non-positive integer");
  if (!(z < 1.0))
    throw domain_error("gauss_2f1: argument must satisfy z < 1, got " +
                       std::to_string(z));
  if (z == 0.0) return 1.0;
  if (z > 0.0) {
    if (z < kHyp2f1SwitchW) return hyp2f1_gauss_series(a, b, c, z);
    if (std::abs(c - a - b) > 1e-12 * (1.0 + std::abs(c)))
      throw domain_error(
          "gauss_2f1: argument near 1 supported only for c = a + b");
    return hyp2f1_log_core(a, b, 1.0 - z, std::log1p(-z), polygamma(0, a),
                           polygamma(0, b));
  }
  // z < 0. Small arguments sum directly; otherwise Pfaff w = z/(z-1).
  if (z > -0.25) return hyp2f1_gauss_series(a, b, c, z);
  double w = z / (z - 1.0);
  double b2 = c - b;  // post-Pfaff second parameter
  double pref = std::exp(-a * std::log1p(-z));
  if (w < kHyp2f1SwitchW) return pref * hyp2f1_gauss_series(a, b2, c, w);
  if (std::abs(a - b) > 1e-12 * (1.0 + std::abs(a)))
    throw domain_error(
        "gauss_2f1: large negative argument supported only for a = b");
  // u = 1-w = 1/(1-z), so ln u = -log1p(-z) with no cancellation.
  double u = 1.0 / (1.0 - z);
  return pref * hyp2f1_log_core(a, b2, u, -std::log1p(-z), polygamma(0, a),
                                polygamma(0, b2));
}

// ---------------------------------------------------------------------------
// Polygamma
// ---------------------------------------------------------------------------

namespace {

constexpr double kBernoulli2k[15] = {
    1.0 / 6,         -1.0 / 30,        1.0 / 42,
    -1.0 / 30,       5.0 / 66,         -691.0 / 2730,
    7.0 / 6,         -3617.0 / 510,    43867.0 / 798,
    -174611.0 / 330, 854513.0 / 138,   -236364091.0 / 2730,
    8553103.0 / 6,   -23749461029.0 / 870, 8615841276005.0 / 14322};

double polygamma_asymptotic(int n, double x) {
  // psi^(n)(x) ~ (-1)^(n-1) [ (n-1)!/x^n + n!/(2 x^{n+1}) + sum_k ... ]
  if (n == 0) {
    double sum = std::log(x) - 0.5 / x;
    double x2 = x * x, xp = x2;
    for (int k = 1; k <= 15; ++k) {
      double t = kBernoulli2k[k - 1] / (2.0 * k * xp);
      sum -= t;
      if (std::abs(t) < 1e-18 * std::abs(sum)) break;
      xp *= x2;
    }
    return sum;
  }
  double lead = std::exp(ln_gamma(double(n)) - n * std::log(x));
  double sum = lead * (1.0 + 0.5 * n / x);
  // Bernoulli tail via term ratios (no factorial overflow).
  double t = kBernoulli2k[0] * lead * n * (n + 1.0) / (2.0 * x * x);
  double prev = std::numeric_limits<double>::max();
  for (int k = 1; k <= 15; ++k) {
    if (std::abs(t) > prev) break;  // asymptotic series started diverging
    sum += t;
    prev = std::abs(t);
    if (prev < 1e-18 * std::abs(sum)) break;
    t *= (kBernoulli2k[k] / kBernoulli2k[k - 1]) * (2.0 * k + n) *
         (2.0 * k + n + 1.0) / ((2.0 * k + 1.0) * (2.0 * k + 2.0) * x * x);
  }
  return ((n % 2) ? 1.0 : -1.0) * sum;
}

}  // namespace

double polygamma(int n, double x) {
  if (n < 0) throw domain_error("polygamma: order must be >= 0");
  if (is_nonpositive_integer(x))
    throw pole_error("polygamma: pole at x = " + std::to_string(x));
  double x0 = std::max(16.0, double(n));
  double shift = 0.0;
  while (x < x0) {
    // psi^(n)(x) = psi^(n)(x+1) + (-1)^{n+1} n! / x^{n+1}
    double term;
    if (n == 0) {
      term = -1.0 / x;
    } else {
      double mag =
          std::exp(ln_gamma(n + 1.0) - (n + 1.0) * std::log(std::abs(x)));
      term = (x > 0.0) ? ((n % 2) ? mag : -mag) : mag;
    }
    shift += term;
    x += 1.0;
  }
  return polygamma_asymptotic(n, x) + shift;
}

// ---------------------------------------------------------------------------
// Stirling functions
// ---------------------------------------------------------------------------

namespace {

// exp of a power series with zero constant term, truncated at order kmax.
std::vector<double> exp_series(const std::vector<double>& h, int kmax) {
  std::vector<double> e(kmax + 1, 0.0);
  e[0] = 1.0;
  for (int m = 1; m <= kmax; ++m) {
    double acc = 0.0;
    for (int j = 1; j <= m; ++j) acc += j * h[j] * e[m - j];
    e[m] = acc / m;
  }
  return e;
}

std::vector<double> multiply_series(const std::vector<double>& p,
                                    const std::vector<double>& q, int kmax) {
  std::vector<double> r(kmax + 1, 0.0);
  for (int i = 0; i <= kmax; ++i)
    for (int j = 0; i + j <= kmax && j <= int(q.size()) - 1; ++j)
      r[i + j] += p[i] * q[j];
  return r;
}

double stirling_integer(int n, int k) {
  if (k > n) return 0.0;
  // signed Stirling numbers of the first kind, s(i+1,j) = s(i,j-1) - i s(i,j)
  std::vector<double> row(n + 1, 0.0), next(n + 1, 0.0);
  row[0] = 1.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i + 1; ++j)
      next[j] = (j > 0 ? row[j - 1] : 0.0) - i * row[j];
    std::swap(row, next);
    std::fill(next.begin(), next.end(), 0.0);
  }
  return row[k];
}

}  // namespace

double stirling_s(double alpha, int k) {
  if (!(alpha > 0.0)) throw domain_error("stirling_s: alpha must be > 0");
  if (k < 0) throw domain_error("stirling_s: k must be >= 0");
  if (alpha == std::floor(alpha)) {
    if (alpha > 64) throw domain_error("stirling_s: integer alpha too large");
    return stirling_integer(int(alpha), k);
  }
  const int kmax = k + 8;  // guard order for the exp composition
  // Taylor of lnGamma(u+1) about u = 0 (constant dropped).
  std::vector<double> lg1(kmax + 1, 0.0);
  double fact = 1.0;
  for (int j = 1; j <= kmax; ++j) {
    fact *= j;
    lg1[j] = polygamma(j - 1, 1.0) / fact;
  }
  if (alpha < 0.5) {
    // direct route: [u]_alpha = exp(lnGamma(u+1) - lnGamma(u+1-alpha))
    std::vector<double> h(kmax + 1, 0.0);
    fact = 1.0;
    for (int j = 1; j <= kmax; ++j) {
      fact *= j;
      h[j] = lg1[j] - polygamma(j - 1, 1.0 - alpha) / fact;
    }
    std::vector<double> e = exp_series(h, kmax);
    return std::exp(-ln_gamma(1.0 - alpha)) * e[k];
  }
  // Reflection route, well conditioned uniformly in alpha (the direct
  // route cancels catastrophically near integer alpha):
  //   [u]_alpha = Gamma(u+1) Gamma(alpha-u) sin(pi (u+1-alpha)) / pi
  std::vector<double> h2(kmax + 1, 0.0);
  fact = 1.0;
  for (int j = 1; j <= kmax; ++j) {
    fact *= j;
    h2[j] = ((j % 2) ? -1.0 : 1.0) * polygamma(j - 1, alpha) / fact;
  }
  std::vector<double> e1 = exp_series(lg1, kmax);
  std::vector<double> e2 = exp_series(h2, kmax);
  // sin(pi u + phi), phi = pi (1 - alpha)
  double phi = kPi * (1.0 - alpha);
  double sp = std::sin(phi), cp = std::cos(phi);
  std::vector<double> s(kmax + 1, 0.0);
  double pw = 1.0;
  fact = 1.0;
  for (int j = 0; j <= kmax; ++j) {
    if (j > 0) {
      pw *= kPi;
      fact *= j;
    }
    double trig = (j % 2 == 0) ? sp : cp;
    double sgn = ((j / 2) % 2) ? -1.0 : 1.0;
    s[j] = sgn * trig * pw / fact;
  }
  std::vector<double> prod = multiply_series(multiply_series(e1, e2, kmax), s, kmax);
  return std::exp(ln_gamma(alpha)) / kPi * prod[k];
}

double cauchy_ck(double alpha, int k) {
  double acc = 0.0;
  for (int j = 0; j <= k; ++j) acc += stirling_s(alpha, j) * stirling_s(alpha, k - j);
  return acc;
}

}  // namespace lagfrac
