#include "lagfrac/quadrature.hpp"

#include <Eigen/Dense>
#include <map>
#include <mutex>
#include <tuple>

#include "lagfrac/specfun.hpp"

namespace lagfrac {

namespace {

// Golub-Welsch: nodes are the eigenvalues of the symmetric tridiagonal
// recurrence matrix, weights mu0 * (first eigenvector component)^2.
QuadRule golub_welsch(const Eigen::VectorXd& alpha, const Eigen::VectorXd& beta,
                      double mu0) {
  int n = int(alpha.size());
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) J(i, i) = alpha[i];
  for (int i = 0; i + 1 < n; ++i) {
    double s = std::sqrt(beta[i + 1]);
    J(i, i + 1) = s;
    J(i + 1, i) = s;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  QuadRule r;
  r.nodes = es.eigenvalues().array();
  r.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double v0 = es.eigenvectors()(0, i);
    r.weights[i] = mu0 * v0 * v0;
  }
  return r;
}

QuadRule make_jacobi(int n, double a, double b) {
  Eigen::VectorXd alpha(n), beta(n);
  double ab = a + b;
  alpha[0] = (b - a) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    double d = 2.0 * k + ab;
    alpha[k] = (b * b - a * a) / (d * (d + 2.0));
  }
  beta[0] = 0.0;  // unused
  if (n > 1) beta[1] = 4.0 * (a + 1.0) * (b + 1.0) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
  for (int k = 2; k < n; ++k) {
    double d = 2.0 * k + ab;
    beta[k] = 4.0 * k * (k + a) * (k + b) * (k + ab) /
              (d * d * (d + 1.0) * (d - 1.0));
  }
  double mu0 = std::pow(2.0, ab + 1.0) *
               std::exp(ln_gamma(a + 1.0) + ln_gamma(b + 1.0) - ln_gamma(ab + 2.0));
  return golub_welsch(alpha, beta, mu0);
}

std::mutex g_rule_mutex;

}  // namespace

const QuadRule& legendre_rule(int n) {
  static std::map<int, QuadRule> cache;
  std::lock_guard<std::mutex> lock(g_rule_mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_jacobi(n, 0.0, 0.0)).first;
  return it->second;
}

const QuadRule& jacobi_rule(int n, double a, double b) {
  if (!(a > -1.0) || !(b > -1.0))
    throw domain_error("jacobi_rule: weight exponents must be > -1");
  static std::map<std::tuple<int, double, double>, QuadRule> cache;
  std::lock_guard<std::mutex> lock(g_rule_mutex);
  auto key = std::make_tuple(n, a, b);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, make_jacobi(n, a, b)).first;
  return it->second;
}

}  // namespace lagfrac
