#include "dunkl/radial.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

#include "dunkl/errors.hpp"
#include "dunkl/specfun.hpp"

namespace dunkl::radial {
namespace {

void require_k(double k_plus) {
  if (!(k_plus > -1.0)) throw std::domain_error(fmt::format("radial state needs K_+ > -1, got {}", k_plus));
}

// 8th-order central second difference: f'' ~ sum c_k f(r + k h) / h^2.
constexpr std::array<double, 9> kD2 = {-1.0 / 560, 8.0 / 315, -1.0 / 5,   8.0 / 5,  -205.0 / 72,
                                       8.0 / 5,    -1.0 / 5,  8.0 / 315, -1.0 / 560};

}  // namespace

RadialGrid RadialGrid::uniform(double h, double r_max) {
  if (!(h > 0.0) || !(r_max > 2.0 * h)) throw std::invalid_argument("radial grid needs 0 < 2h < r_max");
  RadialGrid g;
  const auto intervals = static_cast<long>(std::llround(r_max / h));
  g.h = h;
  g.r_max = intervals * h;
  g.r.reserve(intervals - 1);
  for (long i = 1; i < intervals; ++i) g.r.push_back(i * h);
  return g;
}

RadialGrid RadialGrid::for_oscillator(double h, double mass, double omega) {
  return uniform(h, 12.0 / std::sqrt(mass * omega));
}

double log_normalization(int n, double k_plus) {
  require_k(k_plus);
  if (n < 0) throw std::domain_error("radial quantum number must be non-negative");
  return 0.5 * (std::log(2.0) + specfun::log_gamma(n + 1.0) - specfun::log_gamma(n + k_plus + 1.0));
}

double radial_eigenfunction(const RadialState& s, double r) {
  require_k(s.k_plus);
  if (!(r > 0.0)) throw std::domain_error("radial coordinate must be positive");
  const double mw = s.mass * s.omega;
  const double t = mw * r * r;
  const double log_env = log_normalization(s.n, s.k_plus) + 0.5 * (s.k_plus + 1.0) * std::log(mw) +
                         (s.k_plus + 0.5) * std::log(r) - 0.5 * t;
  return std::exp(log_env) * specfun::laguerre(s.n, s.k_plus, t);
}

double oscillator_energy(const RadialState& s) { return s.omega * (2.0 * s.n + s.k_plus + 1.0); }

double ode_residual(const RadialState& s, const RadialGrid& grid, double energy_offset) {
  require_k(s.k_plus);
  const double e = oscillator_energy(s) + energy_offset;
  const double mw = s.mass * s.omega;
  const double centrifugal = s.k_plus * s.k_plus - 0.25;
  const double h = grid.h;
  double worst = 0.0;
  double scale = 0.0;
  for (double r : grid.r) {
    if (r < 64.0 * h) continue;  // r^{K+1/2} is not smooth at the origin
    double d2 = 0.0;
    for (int k = -4; k <= 4; ++k) d2 += kD2[k + 4] * radial_eigenfunction(s, r + k * h);
    d2 /= h * h;
    const double f = radial_eigenfunction(s, r);
    const double res = d2 - centrifugal / (r * r) * f - mw * mw * r * r * f + 2.0 * s.mass * e * f;
    worst = std::max(worst, std::abs(res));
    scale = std::max(scale, std::abs(f));
  }
  if (scale == 0.0) throw std::runtime_error("radial function vanishes on the residual grid");
  return worst / (mw * scale);
}

int sturm_count(const std::vector<double>& diag, const std::vector<double>& off, double x) {
  int count = 0;
  double d = 1.0;
  const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    const double b2 = i == 0 ? 0.0 : off[i - 1] * off[i - 1];
    d = diag[i] - x - (i == 0 ? 0.0 : b2 / d);
    if (d == 0.0) d = -tiny;
    if (d < 0.0) ++count;
  }
  return count;
}

std::vector<double> fd_eigensolve(double k_plus, double mass, double omega, const RadialGrid& grid, int k_levels) {
  require_k(k_plus);
  if (k_levels < 1) throw std::invalid_argument("k_levels must be positive");
  if (static_cast<int>(grid.r.size()) < 4 * k_levels) throw std::invalid_argument("grid too coarse for requested levels");
  const double h = grid.h;
  const double mw = mass * omega;
  const double centrifugal = k_plus * k_plus - 0.25;
  const std::size_t n = grid.r.size();
  std::vector<double> diag(n);
  std::vector<double> off(n - 1, -1.0 / (h * h));
  double lo = std::numeric_limits<double>::max();
  double hi = std::numeric_limits<double>::lowest();
  for (std::size_t i = 0; i < n; ++i) {
    const double r = grid.r[i];
    diag[i] = 2.0 / (h * h) + centrifugal / (r * r) + mw * mw * r * r;
    lo = std::min(lo, diag[i] - 2.0 / (h * h));
    hi = std::max(hi, diag[i] + 2.0 / (h * h));
  }

  std::vector<double> out;
  out.reserve(k_levels);
  for (int k = 0; k < k_levels; ++k) {
    double a = lo;
    double b = hi;
    if (sturm_count(diag, off, a) > k || sturm_count(diag, off, b) <= k)
      throw convergence_error("Sturm count inconsistent with Gershgorin bracket");
    for (int it = 0; it < 200 && b - a > 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(b));
         ++it) {
      const double mid = 0.5 * (a + b);
      if (sturm_count(diag, off, mid) > k)
        b = mid;
      else
        a = mid;
    }
    if (sturm_count(diag, off, a) > k || sturm_count(diag, off, b) <= k)
      throw convergence_error("Sturm bisection lost its bracket");
    out.push_back(0.5 * (a + b) / (2.0 * mass));
  }
  return out;
}

double inner_solution(int n, double k_minus, double mass, double omega, double amplitude, double r) {
  require_k(k_minus);
  const double t = mass * omega * r * r;
  return amplitude * std::pow(r, k_minus + 0.5) * std::exp(-0.5 * t) * specfun::laguerre(n, k_minus, t);
}

double matched_outer_amplitude(double inner_amplitude, double k_minus, double k_plus, double tube_radius) {
  if (!(tube_radius > 0.0)) throw std::domain_error("flux-tube radius must be positive");
  return inner_amplitude * std::pow(tube_radius, k_minus - k_plus);
}

}  // namespace dunkl::radial
