#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "lagfrac/grid.hpp"

namespace lagfrac {

using Complex = std::complex<double>;

enum class CatalogKind { Monomial, ExpDecay, SmoothBump, Polynomial, Tabulated, Custom };

/// Open strip of Re(s) on which a Mellin transform converges absolutely.
struct MellinStrip {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double nu) const { return nu > lo && nu < hi; }
};

/// A test function on (0, inf) carrying the endpoint metadata the singular
/// quadratures need, and a closed-form Mellin transform when one exists.
class CatalogFunction {
 public:
  static CatalogFunction monomial(double mu);
  static CatalogFunction exp_decay(double rate);
  /// ((x-a)(b-x))^order / ((b-a)/2)^(2 order) on [a,b], zero outside.
  static CatalogFunction smooth_bump(double a, double b, int order);
  static CatalogFunction polynomial(std::vector<double> coeffs);
  static CatalogFunction constant(double c);
  static CatalogFunction tabulated(GridFunction g);
  /// Arbitrary callable with explicit metadata (internal plumbing for
  /// operator composition).
  static CatalogFunction custom(std::function<double(double)> f,
                                double growth_at_zero, double support_lo,
                                double support_hi, bool exp_decay,
                                std::vector<double> breakpoints = {});

  double operator()(double x) const;

  CatalogKind kind() const { return kind_; }
  double param(int i = 0) const { return params_.at(i); }

  /// f ~ x^g as x -> 0 (meaningful when support starts at 0).
  double growth_at_zero() const { return growth_; }
  /// f = O(x^{-d}) as x -> inf; infinite for exponential/compact decay.
  double decay_exponent() const { return decay_; }
  bool decays_exponentially() const { return exp_decay_; }
  double support_lo() const { return support_lo_; }
  double support_hi() const { return support_hi_; }
  /// Smoothness breakpoints in (0, inf), for panel splitting.
  const std::vector<double>& breakpoints() const { return breaks_; }

  bool has_mellin_closed_form() const { return has_mellin_; }
  Complex mellin(Complex s) const;
  MellinStrip mellin_strip() const;

  std::string describe() const;

 private:
  CatalogFunction() = default;

  CatalogKind kind_ = CatalogKind::Monomial;
  std::vector<double> params_;
  std::vector<double> coeffs_;  // polynomial / bump expansion
  struct TabData {
    GridFunction grid;
    CubicSpline spline;
  };
  std::shared_ptr<const TabData> tab_;
  std::function<double(double)> fn_;

  double growth_ = 0.0;
  double decay_ = 0.0;
  bool exp_decay_ = false;
  double support_lo_ = 0.0;
  double support_hi_ = std::numeric_limits<double>::infinity();
  std::vector<double> breaks_;
  bool has_mellin_ = false;
  MellinStrip strip_;
};

}  // namespace lagfrac
