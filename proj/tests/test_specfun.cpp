#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "dunkl/specfun.hpp"

using namespace dunkl::specfun;
using boost::math::quadrature::tanh_sinh;

namespace {

// generalized binomial via gamma functions
double binom(double top, double k) {
  return std::exp(std::lgamma(top + 1.0) - std::lgamma(k + 1.0) - std::lgamma(top - k + 1.0));
}

struct Series {
  double sum = 0.0;
  double magnitude = 0.0;  // sum of |terms|, sets the attainable accuracy
};

Series laguerre_series(int n, double alpha, double x) {
  Series s;
  for (int k = 0; k <= n; ++k) {
    const double t = std::pow(-x, k) / std::tgamma(k + 1.0) * binom(n + alpha, n - k);
    s.sum += t;
    s.magnitude += std::abs(t);
  }
  return s;
}

double jacobi_series(int n, double a, double b, double x) {
  double s = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double c1 = std::exp(std::lgamma(n + a + 1.0) - std::lgamma(n - k + 1.0) - std::lgamma(a + k + 1.0));
    const double c2 = std::exp(std::lgamma(n + b + 1.0) - std::lgamma(k + 1.0) - std::lgamma(b + n - k + 1.0));
    s += c1 * c2 * std::pow(0.5 * (x - 1.0), k) * std::pow(0.5 * (x + 1.0), n - k);
  }
  return s;
}

// weighted norm of a component over [0, 2pi); integrands here are even under
// both reflections, so four copies of the first quadrant
template <class F>
double quadrant_norm(F f, double nu1, double nu2) {
  tanh_sinh<double> ts;
  // xc is the signed distance to the nearer endpoint; it keeps the singular
  // weight factors accurate right up to the ends
  const double q = ts.integrate(
      [&](double phi, double xc) {
        const double v = f(phi);
        const double c = xc > 0 ? std::sin(xc) : std::cos(phi);
        const double s = xc < 0 ? std::sin(-xc) : std::sin(phi);
        return std::pow(c, 2 * nu1) * std::pow(s, 2 * nu2) * v * v;
      },
      0.0, std::numbers::pi / 2);
  return 4.0 * q;
}

}  // namespace

TEST_CASE("laguerre matches the explicit sum") {
  for (int n = 0; n <= 12; ++n)
    for (double alpha : {-0.5, 0.0, 0.7, 2.5, 6.0})
      for (double x : {0.0, 0.3, 1.7, 5.0, 11.0}) {
        const auto ref = laguerre_series(n, alpha, x);
        CHECK(std::abs(laguerre(n, alpha, x) - ref.sum) <= 1e-13 * (1.0 + ref.magnitude));
      }
}

TEST_CASE("laguerre derivative against central difference") {
  for (int n = 1; n <= 8; ++n) {
    const double x = 1.3, h = 1e-5;
    const double fd = (laguerre(n, 0.8, x + h) - laguerre(n, 0.8, x - h)) / (2 * h);
    CHECK(laguerre_derivative(n, 0.8, x) == doctest::Approx(fd).epsilon(1e-8));
  }
  CHECK(laguerre_derivative(0, 1.0, 2.0) == 0.0);
}

TEST_CASE("jacobi matches the explicit sum, also outside [-1, 1]") {
  for (int n = 0; n <= 10; ++n)
    for (auto [a, b] : {std::pair{-0.5, -0.5}, {0.3, -0.8}, {1.5, 0.5}, {-0.2, 2.0}})
      for (double x : {-2.0, -1.0, -0.4, 0.0, 0.6, 1.0, 1.8}) {
        const double ref = jacobi_series(n, a, b, x);
        CHECK(jacobi(n, {a, b}, x) == doctest::Approx(ref).epsilon(1e-11).scale(1.0));
      }
}

TEST_CASE("jacobi polynomials are orthogonal under their weight") {
  tanh_sinh<double> ts;
  const double a = -0.3, b = 0.4;
  for (int m = 0; m <= 4; ++m)
    for (int n = m + 1; n <= 5; ++n) {
      const double ip = ts.integrate(
          [&](double x) { return std::pow(1 - x, a) * std::pow(1 + x, b) * jacobi(m, {a, b}, x) * jacobi(n, {a, b}, x); },
          -1.0, 1.0);
      CHECK(std::abs(ip) < 1e-10);
    }
}

TEST_CASE("jacobi derivative against central difference") {
  for (int n = 1; n <= 7; ++n) {
    const double x = 0.27, h = 1e-5;
    const double fd = (jacobi(n, {0.2, -0.4}, x + h) - jacobi(n, {0.2, -0.4}, x - h)) / (2 * h);
    CHECK(jacobi_derivative(n, {0.2, -0.4}, x) == doctest::Approx(fd).epsilon(1e-8));
  }
}

TEST_CASE("log_gamma") {
  for (double x : {0.1, 0.5, 1.0, 2.5, 7.25, 40.0, 170.5})
    CHECK(log_gamma(x) == doctest::Approx(boost::math::lgamma(x)).epsilon(1e-14));
  CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(log_gamma(-1.5), std::domain_error);
}

TEST_CASE("even-sector constants normalize both components") {
  for (auto [nu1, nu2] : {std::pair{0.0, 0.0}, {0.3, -0.3}, {-0.4, 0.4}, {0.25, 0.1}})
    for (int l = 1; l <= 4; ++l) {
      const auto c = angular_norm_even(l, nu1, nu2);
      const double n1 = quadrant_norm(
          [&](double phi) { return c.primary * jacobi(l, {nu1 - 0.5, nu2 - 0.5}, -std::cos(2 * phi)); }, nu1, nu2);
      const double n2 = quadrant_norm(
          [&](double phi) {
            return c.secondary * std::sin(phi) * std::cos(phi) * jacobi(l - 1, {nu1 + 0.5, nu2 + 0.5}, -std::cos(2 * phi));
          },
          nu1, nu2);
      CHECK(n1 == doctest::Approx(1.0).epsilon(1e-9));
      CHECK(n2 == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("odd-sector constants normalize both components") {
  for (auto [nu1, nu2] : {std::pair{0.0, 0.0}, {0.25, 0.25}, {1.0, 1.0}, {0.1, 0.3}})
    for (double l : {0.5, 1.5, 2.5, 3.5}) {
      const int k = static_cast<int>(l - 0.5);
      const auto c = angular_norm_odd(l, nu1, nu2);
      const double n1 = quadrant_norm(
          [&](double phi) { return c.primary * std::cos(phi) * jacobi(k, {nu1 + 0.5, nu2 - 0.5}, -std::cos(2 * phi)); },
          nu1, nu2);
      const double n2 = quadrant_norm(
          [&](double phi) { return c.secondary * std::sin(phi) * jacobi(k, {nu1 - 0.5, nu2 + 0.5}, -std::cos(2 * phi)); },
          nu1, nu2);
      CHECK(n1 == doctest::Approx(1.0).epsilon(1e-9));
      CHECK(n2 == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("as-typeset odd constants: B agrees, B' does not normalize") {
  const auto canon = angular_norm_odd(1.5, 0.25, 0.25);
  const auto printed = angular_norm_odd_printed(1.5, 0.25, 0.25);
  CHECK(printed.primary == doctest::Approx(canon.primary).epsilon(1e-13));
  CHECK(std::abs(printed.secondary / canon.secondary - 1.0) > 1e-2);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(angular_norm_even(1, -0.5, 0.0), std::domain_error);
  CHECK_THROWS_AS(angular_norm_even(0, 0.1, 0.1), std::domain_error);
  CHECK_THROWS_AS(angular_norm_odd(1.0, 0.1, 0.1), std::domain_error);
  CHECK_THROWS_AS(jacobi(2, {-1.0, 0.0}, 0.3), std::domain_error);
  CHECK_THROWS_AS(laguerre(-1, 0.0, 1.0), std::domain_error);
}
