#include "lagfrac/catalog.hpp"

#include <cmath>
#include <cstdio>

#include "lagfrac/specfun.hpp"

namespace lagfrac {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

CatalogFunction CatalogFunction::monomial(double mu) {
  CatalogFunction f;
  f.kind_ = CatalogKind::Monomial;
  f.params_ = {mu};
  f.growth_ = mu;
  f.decay_ = -mu;
  return f;
}

CatalogFunction CatalogFunction::exp_decay(double rate) {
  if (!(rate > 0.0)) throw domain_error("exp_decay: rate must be > 0");
  CatalogFunction f;
  f.kind_ = CatalogKind::ExpDecay;
  f.params_ = {rate};
  f.decay_ = kInf;
  f.exp_decay_ = true;
  f.has_mellin_ = true;
  f.strip_ = {0.0, kInf};
  return f;
}

CatalogFunction CatalogFunction::smooth_bump(double a, double b, int order) {
  if (!(0.0 < a && a < b)) throw domain_error("smooth_bump: need 0 < a < b");
  if (order < 1) throw domain_error("smooth_bump: order must be >= 1");
  CatalogFunction f;
  f.kind_ = CatalogKind::SmoothBump;
  f.params_ = {a, b, double(order)};
  // expand ((x-a)(b-x))^order = (-x^2 + (a+b)x - ab)^order
  std::vector<double> base = {-a * b, a + b, -1.0};
  std::vector<double> p = {1.0};
  for (int q = 0; q < order; ++q) {
    std::vector<double> r(p.size() + 2, 0.0);
    for (size_t i = 0; i < p.size(); ++i)
      for (size_t j = 0; j < 3; ++j) r[i + j] += p[i] * base[j];
    p = std::move(r);
  }
  double norm = std::pow(0.5 * (b - a), 2.0 * order);
  for (double& c : p) c /= norm;
  f.coeffs_ = std::move(p);
  f.decay_ = kInf;
  f.exp_decay_ = true;  // compact support: decays faster than any power
  f.support_lo_ = a;
  f.support_hi_ = b;
  f.breaks_ = {a, b};
  f.has_mellin_ = true;
  f.strip_ = {-kInf, kInf};
  return f;
}

CatalogFunction CatalogFunction::polynomial(std::vector<double> coeffs) {
  if (coeffs.empty()) coeffs = {0.0};
  CatalogFunction f;
  f.kind_ = CatalogKind::Polynomial;
  f.coeffs_ = std::move(coeffs);
  int lo = 0;
  while (lo + 1 < int(f.coeffs_.size()) && f.coeffs_[lo] == 0.0) ++lo;
  f.growth_ = double(lo);
  f.decay_ = -double(f.coeffs_.size() - 1);
  return f;
}

CatalogFunction CatalogFunction::constant(double c) { return polynomial({c}); }

CatalogFunction CatalogFunction::tabulated(GridFunction g) {
  CatalogFunction f;
  f.kind_ = CatalogKind::Tabulated;
  auto tab = std::make_shared<TabData>();
  tab->spline = CubicSpline(g.nodes, g.values);
  tab->grid = std::move(g);
  f.support_hi_ = tab->grid.length;
  f.decay_ = kInf;
  f.exp_decay_ = true;  // nothing beyond the grid
  f.tab_ = std::move(tab);
  return f;
}

CatalogFunction CatalogFunction::custom(std::function<double(double)> fn,
                                        double growth_at_zero,
                                        double support_lo, double support_hi,
                                        bool exp_decay,
                                        std::vector<double> breakpoints) {
  CatalogFunction f;
  f.kind_ = CatalogKind::Custom;
  f.fn_ = std::move(fn);
  f.growth_ = growth_at_zero;
  f.support_lo_ = support_lo;
  f.support_hi_ = support_hi;
  f.exp_decay_ = exp_decay;
  f.decay_ = exp_decay ? kInf : 0.0;
  f.breaks_ = std::move(breakpoints);
  return f;
}

double CatalogFunction::operator()(double x) const {
  switch (kind_) {
    case CatalogKind::Monomial:
      return std::pow(x, params_[0]);
    case CatalogKind::ExpDecay:
      return std::exp(-params_[0] * x);
    case CatalogKind::SmoothBump: {
      if (x <= params_[0] || x >= params_[1]) return 0.0;
      double acc = 0.0;
      for (int k = int(coeffs_.size()) - 1; k >= 0; --k)
        acc = acc * x + coeffs_[k];
      return acc;
    }
    case CatalogKind::Polynomial: {
      double acc = 0.0;
      for (int k = int(coeffs_.size()) - 1; k >= 0; --k)
        acc = acc * x + coeffs_[k];
      return acc;
    }
    case CatalogKind::Tabulated:
      return tab_->spline(x);
    case CatalogKind::Custom:
      return fn_(x);
  }
  return 0.0;
}

Complex CatalogFunction::mellin(Complex s) const {
  if (!has_mellin_)
    throw domain_error("mellin: no closed-form transform for " + describe());
  if (kind_ == CatalogKind::ExpDecay) {
    if (!strip_.contains(s.real()))
      throw domain_error("mellin: Re(s) outside the fundamental strip");
    double rate = params_[0];
    return std::exp(ln_gamma(s) - s * std::log(rate));
  }
  // smooth bump: sum_k c_k (b^{s+k} - a^{s+k})/(s+k), removable at s = -k
  double a = params_[0], b = params_[1];
  double la = std::log(a), lb = std::log(b);
  Complex acc = 0.0;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0.0) continue;
    Complex w = s + double(k);
    Complex term;
    if (std::abs(w) < 1e-6) {
      // (e^{w lb} - e^{w la})/w expanded to O(w^2)
      term = (lb - la) + w * (lb * lb - la * la) / 2.0 +
             w * w * (lb * lb * lb - la * la * la) / 6.0;
    } else {
      term = (std::exp(w * lb) - std::exp(w * la)) / w;
    }
    acc += coeffs_[k] * term;
  }
  return acc;
}

MellinStrip CatalogFunction::mellin_strip() const {
  if (!has_mellin_)
    throw domain_error("mellin_strip: no closed-form transform for " + describe());
  return strip_;
}

std::string CatalogFunction::describe() const {
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return std::string(buf);
  };
  switch (kind_) {
    case CatalogKind::Monomial:
      return "monomial:" + num(params_[0]);
    case CatalogKind::ExpDecay:
      return "exp:" + num(params_[0]);
    case CatalogKind::SmoothBump:
      return "bump:" + num(params_[0]) + "," + num(params_[1]) + "," +
             num(params_[2]);
    case CatalogKind::Polynomial: {
      std::string s = "poly:";
      for (size_t k = 0; k < coeffs_.size(); ++k)
        s += (k ? "," : "") + num(coeffs_[k]);
      return s;
    }
    case CatalogKind::Tabulated:
      return "tabulated:" + std::to_string(tab_->grid.size());
    case CatalogKind::Custom:
      return "custom";
  }
  return "?";
}

}  // namespace lagfrac
