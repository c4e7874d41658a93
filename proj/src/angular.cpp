#include "dunkl/angular.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

#include "dunkl/specfun.hpp"

namespace dunkl::angular {
namespace {

constexpr double pi = std::numbers::pi;
constexpr cplx I{0.0, 1.0};

std::vector<cplx> circulant_apply(std::span<const double> row, std::span<const cplx> f) {
  const int n = static_cast<int>(f.size());
  std::vector<cplx> out(n);
  for (int i = 0; i < n; ++i) {
    cplx acc = 0.0;
    for (int j = 0; j < n; ++j) {
      int k = i - j;
      if (k < 0) k += n;
      acc += row[k] * f[j];
    }
    out[i] = acc;
  }
  return out;
}

void require_same_size(std::span<const cplx> f, const AngularGrid& grid) {
  if (static_cast<int>(f.size()) != grid.size()) throw std::invalid_argument("function/grid size mismatch");
}

}  // namespace

AngularGrid::AngularGrid(int n_points, double nu1, double nu2) : nu1_(nu1), nu2_(nu2) {
  if (n_points < 64 || n_points % 4 != 0)
    throw std::invalid_argument("angular grid needs N >= 64 and N divisible by 4");
  if (!(nu1 > -0.5) || !(nu2 > -0.5)) throw std::invalid_argument("Dunkl parameters must exceed -1/2");
  spacing_ = 2.0 * pi / n_points;
  phi_.resize(n_points);
  weight_.resize(n_points);
  for (int i = 0; i < n_points; ++i) {
    phi_[i] = (i + 0.5) * spacing_;
    weight_[i] = std::pow(std::abs(std::cos(phi_[i])), 2.0 * nu1) * std::pow(std::abs(std::sin(phi_[i])), 2.0 * nu2);
  }

  d1_row_.assign(n_points, 0.0);
  d2_row_.assign(n_points, 0.0);
  d2_row_[0] = -pi * pi / (3.0 * spacing_ * spacing_) - 1.0 / 6.0;
  for (int k = 1; k < n_points; ++k) {
    const double alt = (k % 2 == 0) ? 1.0 : -1.0;
    const double half = 0.5 * k * spacing_;
    d1_row_[k] = 0.5 * alt / std::tan(half);
    const double s = std::sin(half);
    d2_row_[k] = -0.5 * alt / (s * s);
  }
}

int AngularGrid::reflect_x(int i) const {
  const int n = size();
  return ((n / 2 - 1 - i) % n + n) % n;
}

int AngularGrid::reflect_y(int i) const { return size() - 1 - i; }

std::vector<cplx> AngularGrid::derivative(std::span<const cplx> f) const {
  require_same_size(f, *this);
  return circulant_apply(d1_row_, f);
}

std::vector<cplx> AngularGrid::second_derivative(std::span<const cplx> f) const {
  require_same_size(f, *this);
  return circulant_apply(d2_row_, f);
}

cplx evaluate_phi(const ModelParams& p, AngularIndex l, Branch branch, double phi, JacobiArgument arg) {
  if (!in_sector_domain(p.sector, l)) throw std::domain_error("angular index outside sector domain");
  const double x = arg == JacobiArgument::double_angle ? -std::cos(2.0 * phi) : -2.0 * std::cos(phi);
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  const double lam_sign = sign(branch);
  cplx value;
  if (p.sector == Sector::even) {
    const int deg = l.twice() / 2;
    const auto norms = specfun::angular_norm_even(deg, p.nu1, p.nu2);
    const double even = norms.primary * specfun::jacobi(deg, {p.nu1 - 0.5, p.nu2 - 0.5}, x);
    const double odd = norms.secondary * s * c * specfun::jacobi(deg - 1, {p.nu1 + 0.5, p.nu2 + 0.5}, x);
    value = even + I * lam_sign * odd;
  } else {
    const int deg = (l.twice() - 1) / 2;
    const auto norms = specfun::angular_norm_odd(l.value(), p.nu1, p.nu2);
    const double cos_part = norms.primary * c * specfun::jacobi(deg, {p.nu1 + 0.5, p.nu2 - 0.5}, x);
    const double sin_part = norms.secondary * s * specfun::jacobi(deg, {p.nu1 - 0.5, p.nu2 + 0.5}, x);
    value = cos_part - I * lam_sign * sin_part;
  }
  // each reflection component has unit norm on its own
  return value * std::numbers::sqrt2 * 0.5;
}

AngularFunction build_phi(const ModelParams& p, AngularIndex l, Branch branch, const AngularGrid& grid,
                          JacobiArgument arg) {
  AngularFunction f;
  f.sector = p.sector;
  f.parity_x = p.sector == Sector::even ? +1 : -1;
  f.parity_y = +1;
  f.values.resize(grid.size());
  for (int i = 0; i < grid.size(); ++i) f.values[i] = evaluate_phi(p, l, branch, grid.phi(i), arg);
  return f;
}

std::vector<cplx> reflect_x(std::span<const cplx> f, const AngularGrid& grid) {
  require_same_size(f, grid);
  std::vector<cplx> out(f.size());
  for (int i = 0; i < grid.size(); ++i) out[i] = f[grid.reflect_x(i)];
  return out;
}

std::vector<cplx> reflect_y(std::span<const cplx> f, const AngularGrid& grid) {
  require_same_size(f, grid);
  std::vector<cplx> out(f.size());
  for (int i = 0; i < grid.size(); ++i) out[i] = f[grid.reflect_y(i)];
  return out;
}

AngularFunction apply_J(const AngularFunction& f, const AngularGrid& grid) {
  const auto df = grid.derivative(f.values);
  const auto rx = reflect_x(f.values, grid);
  const auto ry = reflect_y(f.values, grid);
  AngularFunction out = f;
  for (int i = 0; i < grid.size(); ++i) {
    const double phi = grid.phi(i);
    const cplx term = df[i] + grid.nu2() / std::tan(phi) * (f.values[i] - ry[i]) -
                      grid.nu1() * std::tan(phi) * (f.values[i] - rx[i]);
    out.values[i] = I * term;
  }
  // J anticommutes with each reflection
  out.parity_x = -f.parity_x;
  out.parity_y = -f.parity_y;
  return out;
}

AngularFunction apply_B(const AngularFunction& f, const AngularGrid& grid) {
  const auto df = grid.derivative(f.values);
  const auto d2f = grid.second_derivative(f.values);
  const auto rx = reflect_x(f.values, grid);
  const auto ry = reflect_y(f.values, grid);
  AngularFunction out = f;
  const double nu1 = grid.nu1();
  const double nu2 = grid.nu2();
  for (int i = 0; i < grid.size(); ++i) {
    const double phi = grid.phi(i);
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    out.values[i] = -0.5 * d2f[i] + (nu1 * s / c - nu2 * c / s) * df[i] +
                    nu1 * (f.values[i] - rx[i]) / (2.0 * c * c) + nu2 * (f.values[i] - ry[i]) / (2.0 * s * s);
  }
  return out;
}

cplx grid_inner_product(std::span<const cplx> f, std::span<const cplx> g, const AngularGrid& grid) {
  require_same_size(f, grid);
  require_same_size(g, grid);
  cplx acc = 0.0;
  for (int i = 0; i < grid.size(); ++i) acc += grid.weight(i) * std::conj(f[i]) * g[i];
  return acc * grid.spacing();
}

GaussRule gauss_jacobi(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("Gauss rule needs at least one node");
  if (!(a > -1.0) || !(b > -1.0)) throw std::domain_error("Jacobi weight needs a, b > -1");
  const double ab = a + b;
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 1));
  diag(0) = (b - a) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    const double c = 2.0 * k + ab;
    diag(k) = (b * b - a * a) / (c * (c + 2.0));
    double beta;
    if (k == 1) {
      beta = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      beta = 4.0 * k * (k + a) * (k + b) * (k + ab) / (c * c * (c + 1.0) * (c - 1.0));
    }
    sub(k - 1) = std::sqrt(beta);
  }
  const double log_mu0 = (ab + 1.0) * std::numbers::ln2 + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
                         std::lgamma(ab + 2.0);
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  if (n == 1) {
    rule.nodes[0] = diag(0);
    rule.weights[0] = std::exp(log_mu0);
    return rule;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw std::runtime_error("Golub-Welsch eigensolve failed");
  const double mu0 = std::exp(log_mu0);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = solver.eigenvalues()(i);
    const double v = solver.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v * v;
  }
  return rule;
}

DunklQuadrature::DunklQuadrature(double nu1, double nu2, int nodes) {
  if (!(nu1 > -0.5) || !(nu2 > -0.5)) throw std::invalid_argument("Dunkl parameters must exceed -1/2");
  const auto rule = gauss_jacobi(nodes, nu1 - 0.5, nu2 - 0.5);
  const double jac = std::exp(-(nu1 + nu2 + 1.0) * std::numbers::ln2);
  angles_.resize(nodes);
  weights_.resize(nodes);
  for (int k = 0; k < nodes; ++k) {
    angles_[k] = 0.5 * std::acos(-rule.nodes[k]);
    weights_[k] = jac * rule.weights[k];
  }
}

cplx DunklQuadrature::integrate(const std::function<cplx(double)>& f) const {
  cplx acc = 0.0;
  for (std::size_t k = 0; k < angles_.size(); ++k) {
    const double phi = angles_[k];
    acc += weights_[k] * (f(phi) + f(pi - phi) + f(-phi) + f(pi + phi));
  }
  return acc;
}

cplx DunklQuadrature::inner_product(const std::function<cplx(double)>& f,
                                    const std::function<cplx(double)>& g) const {
  return integrate([&](double phi) { return std::conj(f(phi)) * g(phi); });
}

SymmetricGrid1D::SymmetricGrid1D(int n_points, double half_width) {
  if (n_points < 2 || n_points % 2 != 0) throw std::invalid_argument("symmetric grid needs an even node count");
  if (!(half_width > 0.0)) throw std::invalid_argument("grid half-width must be positive");
  const int n = n_points;
  x_.resize(n);
  std::vector<double> bary(n);
  for (int k = 0; k < n; ++k) {
    const double theta = (2.0 * k + 1.0) * pi / (2.0 * n);
    x_[k] = half_width * std::cos(theta);
    bary[k] = ((k % 2 == 0) ? 1.0 : -1.0) * std::sin(theta);
  }
  // enforce exact mirror symmetry of the nodes
  for (int k = 0; k < n / 2; ++k) x_[n - 1 - k] = -x_[k];
  diff_.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    double diag = 0.0;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double d = (bary[j] / bary[i]) / (x_[i] - x_[j]);
      diff_[static_cast<std::size_t>(i) * n + j] = d;
      diag -= d;
    }
    diff_[static_cast<std::size_t>(i) * n + i] = diag;
  }
}

std::vector<double> SymmetricGrid1D::derivative(std::span<const double> f) const {
  const int n = size();
  if (static_cast<int>(f.size()) != n) throw std::invalid_argument("function/grid size mismatch");
  std::vector<double> out(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += diff_[static_cast<std::size_t>(i) * n + j] * f[j];
    out[i] = acc;
  }
  return out;
}

std::vector<double> dunkl_derivative_1d(std::span<const double> f, const SymmetricGrid1D& grid, double nu) {
  auto out = grid.derivative(f);
  for (int i = 0; i < grid.size(); ++i) out[i] += nu / grid.x()[i] * (f[i] - f[grid.mirror(i)]);
  return out;
}

std::vector<double> dunkl_derivative_2d(std::span<const double> f, const SymmetricGrid1D& grid, int axis,
                                        double nu) {
  const int n = grid.size();
  if (static_cast<int>(f.size()) != n * n) throw std::invalid_argument("field/grid size mismatch");
  if (axis != 0 && axis != 1) throw std::invalid_argument("axis must be 0 or 1");
  std::vector<double> out(f.size());
  std::vector<double> line(n);
  for (int fixed = 0; fixed < n; ++fixed) {
    auto at = [&](int k) { return axis == 0 ? k * n + fixed : fixed * n + k; };
    for (int k = 0; k < n; ++k) line[k] = f[at(k)];
    const auto d = dunkl_derivative_1d(line, grid, nu);
    for (int k = 0; k < n; ++k) out[at(k)] = d[k];
  }
  return out;
}

}  // namespace dunkl::angular
