#include "dunkl/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dunkl::specfun {
namespace {

void require_degree(int n) {
  if (n < 0) throw std::domain_error("polynomial degree must be non-negative, got " + std::to_string(n));
}

void require_dunkl_nu(double nu1, double nu2) {
  if (!(nu1 > -0.5) || !(nu2 > -0.5))
    throw std::domain_error("Dunkl parameters must satisfy nu > -1/2");
}

// ln Gamma with an explicit positivity check so that the caller's message
// names the offending argument instead of returning +inf.
double lgamma_checked(double x, const char* what) {
  if (!(x > 0.0)) throw std::domain_error(std::string("non-positive Gamma argument in ") + what);
  return std::lgamma(x);
}

bool is_half_integer(double l) {
  const double k = l - 0.5;
  return k >= 0.0 && std::abs(k - std::round(k)) < 1e-12;
}

}  // namespace

double laguerre(int n, double alpha, double x) {
  require_degree(n);
  if (!(alpha > -1.0)) throw std::domain_error("Laguerre parameter must satisfy alpha > -1");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double laguerre_derivative(int n, double alpha, double x) {
  require_degree(n);
  if (n == 0) {
    if (!(alpha > -1.0)) throw std::domain_error("Laguerre parameter must satisfy alpha > -1");
    return 0.0;
  }
  return -laguerre(n - 1, alpha + 1.0, x);
}

double jacobi(int n, JacobiParams params, double x) {
  require_degree(n);
  const double a = params.a;
  const double b = params.b;
  if (!(a > -1.0) || !(b > -1.0)) throw std::domain_error("Jacobi parameters must satisfy a, b > -1");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
  const double ab = a + b;
  const double a2b2 = a * a - b * b;
  for (int k = 2; k <= n; ++k) {
    const double c = 2.0 * k + ab;
    const double denom = 2.0 * k * (k + ab) * (c - 2.0);
    const double lin = (c - 1.0) * (c * (c - 2.0) * x + a2b2);
    const double back = 2.0 * (k + a - 1.0) * (k + b - 1.0) * c;
    const double next = (lin * cur - back * prev) / denom;
    prev = cur;
    cur = next;
  }
  return cur;
}

double jacobi_derivative(int n, JacobiParams params, double x) {
  require_degree(n);
  if (n == 0) {
    jacobi(0, params, x);  // parameter validation
    return 0.0;
  }
  return 0.5 * (n + params.a + params.b + 1.0) * jacobi(n - 1, {params.a + 1.0, params.b + 1.0}, x);
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma requires x > 0");
  return std::lgamma(x);
}

AngularNorms angular_norm_even(int l, double nu1, double nu2) {
  if (l < 1) throw std::domain_error("even-sector angular index must be >= 1");
  require_dunkl_nu(nu1, nu2);
  const double nu = nu1 + nu2;
  const double lead = 2.0 * l + nu;
  if (!(lead > 0.0)) throw std::domain_error("2l + nu1 + nu2 must be positive");
  const double common = std::log(lead) - std::numbers::ln2 - lgamma_checked(l + nu1 + 0.5, "A_l") -
                        lgamma_checked(l + nu2 + 0.5, "A_l");
  const double log_a2 = common + lgamma_checked(l + nu, "A_l") + lgamma_checked(l + 1.0, "A_l");
  const double log_a2p = common + lgamma_checked(l + nu + 1.0, "A'_l") + lgamma_checked(l, "A'_l");
  return {std::exp(0.5 * log_a2), std::exp(0.5 * log_a2p)};
}

AngularNorms angular_norm_odd(double l, double nu1, double nu2) {
  if (!is_half_integer(l)) throw std::domain_error("odd-sector angular index must be a half-integer >= 1/2");
  require_dunkl_nu(nu1, nu2);
  const double nu = nu1 + nu2;
  const double lead = 2.0 * l + nu;
  if (!(lead > 0.0)) throw std::domain_error("2l + nu1 + nu2 must be positive");
  const double common = std::log(lead) - std::numbers::ln2 + lgamma_checked(l + nu + 0.5, "B_l") +
                        lgamma_checked(l + 0.5, "B_l");
  const double log_b2 = common - lgamma_checked(l + nu1 + 1.0, "B_l") - lgamma_checked(l + nu2, "B_l");
  const double log_b2p = common - lgamma_checked(l + nu1, "B'_l") - lgamma_checked(l + nu2 + 1.0, "B'_l");
  return {std::exp(0.5 * log_b2), std::exp(0.5 * log_b2p)};
}

AngularNorms angular_norm_odd_printed(double l, double nu1, double nu2) {
  if (!is_half_integer(l)) throw std::domain_error("odd-sector angular index must be a half-integer >= 1/2");
  require_dunkl_nu(nu1, nu2);
  const double nu = nu1 + nu2;
  const double lead = std::log(2.0 * l + nu) - std::numbers::ln2;
  const double log_b2 = lead + lgamma_checked(l + nu + 0.5, "B_l") + lgamma_checked(l + 0.5, "B_l") -
                        lgamma_checked(l + nu1 + 1.0, "B_l") - lgamma_checked(l + nu2, "B_l");
  const double log_b2p = lead + lgamma_checked(l + nu + 1.0, "B'_l") + lgamma_checked(l + 0.5, "B'_l") -
                         lgamma_checked(l + nu1, "B'_l") - lgamma_checked(l + nu2 + 1.0, "B'_l");
  return {std::exp(0.5 * log_b2), std::exp(0.5 * log_b2p)};
}

}  // namespace dunkl::specfun
