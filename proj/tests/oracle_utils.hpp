// Test-only oracles kept independent of the library's own evaluation paths.
#pragma once

#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using Cplx = std::complex<double>;

// Stirling-series log-gamma with upward shift; independent of the Lanczos
// implementation under test.  ~1e-13 relative for moderate |z|.
inline Cplx ln_gamma_stirling(Cplx z) {
  static const double B[] = {1.0 / 12,      -1.0 / 360,     1.0 / 1260,
                             -1.0 / 1680,   1.0 / 1188,     -691.0 / 360360,
                             1.0 / 156,     -3617.0 / 122400};
  Cplx shift = 0.0;
  while (std::abs(z) < 25.0) {
    shift -= std::log(z);
    z += 1.0;
  }
  Cplx acc = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * M_PI);
  Cplx zp = z;
  for (double b : B) {
    acc += b / zp;
    zp *= z * z;
  }
  return acc + shift;
}

// k-th Taylor coefficient of an analytic f at 0 by trapezoid on a circle
// (Cauchy integral); spectrally accurate.
template <class F>
double taylor_coefficient(F&& f, int k, double radius = 0.5, int m = 128) {
  Cplx acc = 0.0;
  for (int j = 0; j < m; ++j) {
    double th = 2.0 * M_PI * j / m;
    Cplx u = radius * Cplx(std::cos(th), std::sin(th));
    acc += f(u) * Cplx(std::cos(k * th), -std::sin(k * th));
  }
  return (acc / double(m)).real() / std::pow(radius, k);
}

// Modified Bessel I0 by its defining series (the Volterra benchmark).
inline double bessel_i0(double x) {
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    term *= (x * x / 4.0) / (double(k) * k);
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return sum;
}

// Composite Simpson on [a,b] for smooth test integrands.
template <class F>
double simpson(F&& f, double a, double b, int n = 2000) {
  if (n % 2) ++n;
  double h = (b - a) / n, acc = f(a) + f(b);
  for (int i = 1; i < n; ++i) acc += f(a + i * h) * ((i % 2) ? 4.0 : 2.0);
  return acc * h / 3.0;
}

}  // namespace oracle
