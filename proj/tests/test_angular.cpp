#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "dunkl/angular.hpp"
#include "dunkl/spectrum.hpp"

using namespace dunkl;
using namespace dunkl::angular;
using boost::math::quadrature::tanh_sinh;

namespace {

constexpr double kPi = std::numbers::pi;

double sup(const std::vector<cplx>& v) {
  double m = 0.0;
  for (const auto& z : v) m = std::max(m, std::abs(z));
  return m;
}

ModelParams params(double nu1, double nu2, Sector s) {
  ModelParams p;
  p.nu1 = nu1;
  p.nu2 = nu2;
  p.sector = s;
  return p;
}

// weighted integral over [0, 2pi), split at the weight singularities
cplx weighted_integral(const std::function<cplx(double)>& f, double nu1, double nu2) {
  tanh_sinh<double> ts;
  cplx total = 0.0;
  for (int q = 0; q < 4; ++q) {
    const double a = q * kPi / 2, b = a + kPi / 2;
    // xc: signed distance to the nearer endpoint, where one of |cos|, |sin| vanishes
    auto w = [&](double phi, double xc) {
      const double d = std::abs(std::sin(std::abs(xc)));
      const bool left = xc < 0, cos_zero_left = q % 2 == 1;
      const double c = (left == cos_zero_left) ? d : std::abs(std::cos(phi));
      const double s = (left != cos_zero_left) ? d : std::abs(std::sin(phi));
      return std::pow(c, 2 * nu1) * std::pow(s, 2 * nu2);
    };
    total += cplx(ts.integrate([&](double phi, double xc) { return w(phi, xc) * f(phi).real(); }, a, b),
                  ts.integrate([&](double phi, double xc) { return w(phi, xc) * f(phi).imag(); }, a, b));
  }
  return total;
}

}  // namespace

TEST_CASE("grid layout and reflections") {
  CHECK_THROWS(AngularGrid(62, 0, 0));
  CHECK_THROWS(AngularGrid(32, 0, 0));
  const AngularGrid g(64, 0.2, 0.3);
  for (int i = 0; i < g.size(); ++i) {
    const double px = std::remainder(g.phi(g.reflect_x(i)) - (kPi - g.phi(i)), 2 * kPi);
    const double py = std::remainder(g.phi(g.reflect_y(i)) + g.phi(i), 2 * kPi);
    CHECK(std::abs(px) < 1e-12);
    CHECK(std::abs(py) < 1e-12);
  }
}

TEST_CASE("spectral derivatives are exact on trigonometric polynomials") {
  const AngularGrid g(64, 0, 0);
  std::vector<cplx> f(g.size());
  for (int i = 0; i < g.size(); ++i) f[i] = std::sin(3 * g.phi(i)) + cplx(0, 1) * std::cos(7 * g.phi(i));
  const auto d1 = g.derivative(f);
  const auto d2 = g.second_derivative(f);
  for (int i = 0; i < g.size(); ++i) {
    const double p = g.phi(i);
    CHECK(std::abs(d1[i] - (3 * std::cos(3 * p) - cplx(0, 7) * std::sin(7 * p))) < 1e-11);
    CHECK(std::abs(d2[i] - (-9 * std::sin(3 * p) - cplx(0, 49) * std::cos(7 * p))) < 1e-10);
  }
}

TEST_CASE("gauss-jacobi against tanh-sinh") {
  tanh_sinh<double> ts;
  const double a = -0.35, b = 0.6;
  const auto rule = gauss_jacobi(12, a, b);
  auto f = [](double x) { return std::exp(x) * std::cos(2 * x); };
  double gj = 0.0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) gj += rule.weights[k] * f(rule.nodes[k]);
  const double ref = ts.integrate(
      [&](double x, double xc) {
        const double one_minus = xc > 0 ? xc : 1 - x;
        const double one_plus = xc < 0 ? -xc : 1 + x;
        return std::pow(one_minus, a) * std::pow(one_plus, b) * f(x);
      },
      -1.0, 1.0);
  CHECK(gj == doctest::Approx(ref).epsilon(1e-12));
}

TEST_CASE("Dunkl quadrature against tanh-sinh") {
  const double nu1 = 0.3, nu2 = -0.3;
  const DunklQuadrature quad(nu1, nu2, 40);
  auto f = [](double phi) { return cplx(std::cos(phi) + 0.2 * std::sin(3 * phi), std::sin(2 * phi) * std::sin(2 * phi)); };
  const cplx got = quad.integrate(f);
  const cplx ref = weighted_integral(f, nu1, nu2);
  CHECK(std::abs(got - ref) < 1e-9);
}

TEST_CASE("eigenfunctions satisfy J Phi = lambda Phi") {
  struct Case {
    double nu1, nu2;
    Sector s;
    double l;
  };
  for (const auto& c : {Case{0.3, -0.3, Sector::even, 1}, Case{0.3, -0.3, Sector::even, 4}, Case{0.2, 0.45, Sector::even, 2},
                        Case{0.25, 0.25, Sector::odd, 0.5}, Case{0.25, 0.25, Sector::odd, 2.5},
                        Case{0.1, 0.3, Sector::odd, 1.5}, Case{1.0, 1.0, Sector::odd, 3.5}}) {
    const auto p = params(c.nu1, c.nu2, c.s);
    const AngularGrid g(512, c.nu1, c.nu2);
    const auto l = AngularIndex::from_value(c.l);
    for (Branch br : {Branch::plus, Branch::minus}) {
      const auto phi = build_phi(p, l, br, g);
      const auto j = apply_J(phi, g);
      const double lam = lambda_eps(p, l, br);
      std::vector<cplx> diff(phi.values.size());
      for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = j.values[i] - lam * phi.values[i];
      CHECK(sup(diff) / sup(phi.values) < 1e-8);

      const auto b = apply_B(phi, g);
      const double mu = 0.5 * lam * lam - c.nu1 * c.nu2 * (1 - sign(c.s));
      for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = b.values[i] - mu * phi.values[i];
      CHECK(sup(diff) / sup(phi.values) < 1e-7);

      // reflection parity R1 R2 = epsilon
      const auto rr = reflect_x(reflect_y(phi.values, g), g);
      for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = rr[i] - double(sign(c.s)) * phi.values[i];
      CHECK(sup(diff) < 1e-12);
    }
  }
}

TEST_CASE("eigenfunctions are orthonormal (independent quadrature)") {
  const auto p = params(0.3, -0.3, Sector::even);
  for (int a = 1; a <= 3; ++a)
    for (int b = a; b <= 3; ++b) {
      auto fa = [&](double x) { return evaluate_phi(p, AngularIndex::from_value(a), Branch::plus, x); };
      auto fb = [&](double x) { return evaluate_phi(p, AngularIndex::from_value(b), Branch::plus, x); };
      const cplx ip = weighted_integral([&](double x) { return std::conj(fa(x)) * fb(x); }, 0.3, -0.3);
      CHECK(std::abs(ip - (a == b ? 1.0 : 0.0)) < 1e-8);
    }
}

TEST_CASE("trapezoid on the grid agrees when the weight is smooth") {
  const auto p = params(0.0, 0.0, Sector::odd);
  const AngularGrid g(256, 0.0, 0.0);
  const auto phi = build_phi(p, AngularIndex::from_value(1.5), Branch::plus, g);
  CHECK(std::abs(grid_inner_product(phi.values, phi.values, g) - 1.0) < 1e-12);
}

TEST_CASE("as-typeset Jacobi argument breaks the eigen-relation") {
  const auto p = params(0.3, -0.3, Sector::even);
  const AngularGrid g(512, 0.3, -0.3);
  const auto l = AngularIndex::from_value(2);
  const auto phi = build_phi(p, l, Branch::plus, g, JacobiArgument::printed);
  const auto j = apply_J(phi, g);
  std::vector<cplx> diff(phi.values.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = j.values[i] - lambda_eps(p, l, Branch::plus) * phi.values[i];
  CHECK(sup(diff) / sup(phi.values) > 1e-2);
}

TEST_CASE("J squared identity on random band-limited functions") {
  std::mt19937 rng(7);
  std::normal_distribution<double> n01;
  const double nu1 = 0.15, nu2 = 0.4;
  const AngularGrid g(256, nu1, nu2);
  for (int t = 0; t < 5; ++t) {
    AngularFunction f;
    f.values.assign(g.size(), 0.0);
    for (int k = -10; k <= 10; ++k) {
      const cplx c(n01(rng), n01(rng));
      for (int i = 0; i < g.size(); ++i) f.values[i] += c * std::exp(cplx(0, k * g.phi(i)));
    }
    const auto jj = apply_J(apply_J(f, g), g);
    const auto b = apply_B(f, g);
    const auto rr = reflect_x(reflect_y(f.values, g), g);
    std::vector<cplx> diff(f.values.size());
    for (std::size_t i = 0; i < diff.size(); ++i)
      diff[i] = jj.values[i] - 2.0 * b.values[i] - 2 * nu1 * nu2 * (f.values[i] - rr[i]);
    CHECK(sup(diff) / sup(f.values) < 1e-6);
  }
}

TEST_CASE("one-dimensional Dunkl derivative on monomials") {
  const SymmetricGrid1D g(12, 2.0);
  const double nu = 0.3;
  for (int k = 0; k <= 8; ++k) {
    std::vector<double> f(g.size());
    for (int i = 0; i < g.size(); ++i) f[i] = std::pow(g.x()[i], k);
    const auto d = dunkl_derivative_1d(f, g, nu);
    const double coeff = k + nu * (k % 2 == 1 ? 2.0 : 0.0);
    for (int i = 0; i < g.size(); ++i) CHECK(d[i] == doctest::Approx(coeff * std::pow(g.x()[i], k - 1)).epsilon(1e-10).scale(1.0));
  }
}

TEST_CASE("Dunkl derivatives commute and obey the deformed algebra in 2D") {
  const SymmetricGrid1D g(10, 1.0);
  const int n = g.size();
  const double nu1 = 0.2, nu2 = 0.55;
  std::vector<double> f(n * n), xf(n * n), yf(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double x = g.x()[i], y = g.x()[j];
      f[i * n + j] = 1 + x - 2 * y + x * y + 0.5 * x * x * y - 0.3 * y * y * y + 0.2 * x * x * x * y * y;
      xf[i * n + j] = x * f[i * n + j];
      yf[i * n + j] = y * f[i * n + j];
    }
  const auto d12 = dunkl_derivative_2d(dunkl_derivative_2d(f, g, 1, nu2), g, 0, nu1);
  const auto d21 = dunkl_derivative_2d(dunkl_derivative_2d(f, g, 0, nu1), g, 1, nu2);
  const auto d1xf = dunkl_derivative_2d(xf, g, 0, nu1);
  const auto d1f = dunkl_derivative_2d(f, g, 0, nu1);
  const auto d1yf = dunkl_derivative_2d(yf, g, 0, nu1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int k = i * n + j;
      CHECK(std::abs(d12[k] - d21[k]) < 1e-9);
      // [D_1, x] = 1 + 2 nu1 R_1
      CHECK(std::abs(d1xf[k] - g.x()[i] * d1f[k] - (f[k] + 2 * nu1 * f[g.mirror(i) * n + j])) < 1e-10);
      // [D_1, y] = 0
      CHECK(std::abs(d1yf[k] - g.x()[j] * d1f[k]) < 1e-10);
    }
}
