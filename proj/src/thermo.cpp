#include "dunkl/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>

#include "dunkl/errors.hpp"
#include "dunkl/numdiff.hpp"

namespace dunkl::thermo {
namespace {

constexpr double ln2 = std::numbers::ln2;

void require_input(const ThermoInput& in) {
  validate(in.params);
  if (!(in.temperature > 0.0) || !std::isfinite(in.temperature))
    throw std::invalid_argument("temperature must be positive and finite");
  if (auto c = check_constraint(in.params); !c) throw constraint_error(c.diagnostic);
}

// ln cosh y without overflow
double log_cosh(double y) {
  const double a = std::abs(y);
  return a + std::log1p(std::exp(-2.0 * a)) - ln2;
}

// ln(2 cosh y) - y tanh y, the two-level entropy, free of cancellation at large |y|
double two_level_entropy(double y) {
  const double a = std::abs(y);
  const double e = std::exp(-2.0 * a);
  return std::log1p(e) + a * 2.0 * e / (1.0 + e);
}

// 4 b / (e^{2b} - 1) and -2 ln(1 - e^{-2b}), the oscillator pieces
double bose_energy_term(double b) { return 4.0 * b / std::expm1(2.0 * b); }
double log_oscillator_denominator(double b) { return -2.0 * std::log(-std::expm1(-2.0 * b)); }

ThermoInput at_temperature(ThermoInput in, double t) {
  in.temperature = t;
  return in;
}

}  // namespace

std::string to_string(E0Mode mode) { return mode == E0Mode::paper ? "paper" : "enumerated"; }

E0Mode parse_e0_mode(const std::string& text) {
  if (text == "paper") return E0Mode::paper;
  if (text == "enumerated") return E0Mode::enumerated;
  throw std::invalid_argument("e0 mode must be 'paper' or 'enumerated', got '" + text + "'");
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::closed_form: return "closed_form";
    case Provenance::spectral_sum: return "spectral_sum";
    case Provenance::finite_difference: return "finite_difference";
  }
  return "unknown";
}

GroundEnergy ground_energy(const ModelParams& p, E0Mode mode) {
  validate(p);
  if (auto c = check_constraint(p); !c) throw constraint_error(c.diagnostic);
  GroundEnergy g;
  g.mode = mode;
  if (mode == E0Mode::paper) {
    const int l0 = lowest_l(p, Spin::up).aggregated_l0;
    g.value = p.sector == Sector::even ? p.omega * (1.0 + 2.0 * l0) : 2.0 * p.omega * (l0 + sector_nu(p) + 1.5);
    g.per_spin = {g.value, g.value};
    return g;
  }

  for (int i = 0; i < 2; ++i) {
    const Spin spin = kSpins[i];
    g.per_spin[i] = ground_state(p, spin).energy + p.omega * p.theta * sign(spin);
  }
  const double scale = std::max({p.omega, std::abs(g.per_spin[0]), std::abs(g.per_spin[1])});
  g.spin_consistent = std::abs(g.per_spin[0] - g.per_spin[1]) <= 1e-12 * scale;
  if (g.spin_consistent) {
    g.value = 0.5 * (g.per_spin[0] + g.per_spin[1]);
    return g;
  }

  const double cutoff = std::max(g.per_spin[0], g.per_spin[1]) + std::abs(p.theta) * p.omega + 80.0 * p.omega;
  double num = 0.0;
  double den = 0.0;
  constexpr int kPoints = 25;
  for (int i = 0; i < kPoints; ++i) {
    const double bw = 0.2 + (5.0 - 0.2) * i / (kPoints - 1);
    const double beta = bw / p.omega;
    const double y = partition_sum(p, beta, cutoff).log_value - log_oscillator_denominator(bw) - ln2 -
                     log_cosh(bw * p.theta);
    num += beta * y;
    den += beta * beta;
  }
  g.value = -num / den;
  return g;
}

double log_partition_closed(const ThermoInput& in) {
  require_input(in);
  const auto& p = in.params;
  const double beta = 1.0 / in.temperature;
  const double b = beta * p.omega;
  const double e0 = ground_energy(p, in.e0_mode).value;
  return ln2 - beta * e0 + log_cosh(b * p.theta) + log_oscillator_denominator(b);
}

double partition_closed(const ThermoInput& in) { return std::exp(log_partition_closed(in)); }

double free_energy(const ThermoInput& in) { return -in.temperature * log_partition_closed(in); }

double internal_energy(const ThermoInput& in) {
  require_input(in);
  const auto& p = in.params;
  const double b = p.omega / in.temperature;
  const double e0 = ground_energy(p, in.e0_mode).value;
  return e0 - p.omega * p.theta * std::tanh(b * p.theta) + p.omega * bose_energy_term(b) / b;
}

double entropy(const ThermoInput& in) {
  require_input(in);
  const auto& p = in.params;
  const double b = p.omega / in.temperature;
  return two_level_entropy(b * p.theta) + log_oscillator_denominator(b) + bose_energy_term(b);
}

double heat_capacity(const ThermoInput& in) {
  require_input(in);
  const auto& p = in.params;
  const double b = p.omega / in.temperature;
  const double y = b * p.theta;
  const double ch = std::cosh(y);
  const double sh = std::sinh(b);
  const double flux = std::isfinite(ch) ? y * y / (ch * ch) : 0.0;
  const double osc = std::isfinite(sh) ? 2.0 * b * b / (sh * sh) : 0.0;
  return flux + osc;
}

ThermoPoint evaluate(const ThermoInput& in) {
  ThermoPoint pt;
  pt.T = in.temperature;
  const double log_z = log_partition_closed(in);
  pt.Z = std::exp(log_z);
  pt.F = -in.temperature * log_z;
  pt.U = internal_energy(in);
  pt.S = entropy(in);
  pt.C_V = heat_capacity(in);
  pt.provenance = Provenance::closed_form;
  return pt;
}

PartitionSum partition_sum(const ModelParams& p, double beta, double cutoff) {
  if (!(beta > 0.0) || !std::isfinite(beta)) throw std::invalid_argument("beta must be positive and finite");
  const SpectrumTable table = enumerate(p, cutoff);
  const double e_min = table.states.front().energy;
  const double q = std::exp(-2.0 * beta * p.omega);
  const double one_minus_q = -std::expm1(-2.0 * beta * p.omega);

  PartitionSum out;
  out.states = table.states.size();

  // explicit part and the highest enumerated state of every (l, m_s) column
  std::map<std::pair<int, int>, double> column_top;
  for (const auto& e : table.states) {
    out.explicit_sum += std::exp(-beta * (e.energy - e_min));
    auto key = std::make_pair(e.state.l.twice(), sign(e.state.spin));
    auto [it, inserted] = column_top.emplace(key, e.energy);
    if (!inserted) it->second = std::max(it->second, e.energy);
  }
  for (const auto& [key, top] : column_top) out.ladder_tail += std::exp(-beta * (top - e_min)) * q / one_minus_q;

  // first column above the cutoff in each spin family; its l-ladder decides the tail
  for (Spin spin : kSpins) {
    const Branch branch = positive_branch(spin);
    AngularIndex l = lowest_l(p, spin).admissible;
    auto column_energy = [&](AngularIndex li) {
      return p.omega * (effective_k_final(p, li, spin, branch).k_plus + 1.0);
    };
    while (column_energy(l) <= cutoff) l = l.next();
    const double e_first = column_energy(l);
    bool affine = true;
    AngularIndex probe = l;
    for (int step = 0; step < 3; ++step) {
      const double step_e = column_energy(probe.next()) - column_energy(probe);
      affine = affine && std::abs(step_e - 2.0 * p.omega) <= 1e-12 * std::max(p.omega, std::abs(e_first));
      probe = probe.next();
    }
    out.l_tail += std::exp(-beta * (e_first - e_min)) / (one_minus_q * one_minus_q);
    out.l_tail_exact = out.l_tail_exact && affine;
  }

  double scaled = out.explicit_sum + out.ladder_tail;
  if (out.l_tail_exact) {
    scaled += out.l_tail;
  } else {
    out.tail_bound = out.l_tail;
    if (out.tail_bound > 1e-12 * scaled)
      throw cutoff_error(fmt::format("cutoff {} too small: tail bound {:.3e} exceeds 1e-12 of the partial sum", cutoff,
                                     out.tail_bound / scaled));
  }
  out.log_value = -beta * e_min + std::log(scaled);
  out.value = std::exp(out.log_value);
  const double factor = std::exp(-beta * e_min);
  out.explicit_sum *= factor;
  out.ladder_tail *= factor;
  out.l_tail *= factor;
  out.tail_bound *= factor;
  return out;
}

ThermoPoint spectral_sum_point(const ModelParams& p, double temperature, double cutoff) {
  const double beta = 1.0 / temperature;
  auto log_z = [&](double b) { return partition_sum(p, b, cutoff).log_value; };
  auto energy_at = [&](double b) { return -numdiff::richardson_derivative(log_z, b, 0.05 * b, 4).value; };
  ThermoPoint pt;
  pt.T = temperature;
  const double lz = log_z(beta);
  pt.Z = std::exp(lz);
  pt.F = -temperature * lz;
  pt.U = energy_at(beta);
  pt.S = beta * (pt.U - pt.F);
  pt.C_V = -beta * beta * numdiff::richardson_derivative(energy_at, beta, 0.05 * beta, 4).value;
  pt.provenance = Provenance::spectral_sum;
  return pt;
}

ThermoPoint finite_difference_point(const ThermoInput& in) {
  require_input(in);
  const double beta = 1.0 / in.temperature;
  auto log_z = [&](double b) { return log_partition_closed(at_temperature(in, 1.0 / b)); };
  auto energy_t = [&](double t) { return internal_energy(at_temperature(in, t)); };
  ThermoPoint pt;
  pt.T = in.temperature;
  const double lz = log_z(beta);
  pt.Z = std::exp(lz);
  pt.F = -in.temperature * lz;
  pt.U = -numdiff::richardson_derivative(log_z, beta, 0.05 * beta).value;
  pt.S = beta * (pt.U - pt.F);
  pt.C_V = numdiff::richardson_derivative(energy_t, in.temperature, 0.05 * in.temperature).value;
  pt.provenance = Provenance::finite_difference;
  return pt;
}

double flux_peak_abscissa() {
  double x = 1.2;
  for (int i = 0; i < 50; ++i) {
    const double t = std::tanh(x);
    const double g = x * t - 1.0;
    const double dg = t + x * (1.0 - t * t);
    const double dx = g / dg;
    x -= dx;
    if (std::abs(dx) < 1e-16) break;
  }
  return x;
}

namespace {

template <class F>
long double golden_section_max(F&& f, long double a, long double b, long double tol) {
  const long double inv_phi = (std::sqrt(5.0L) - 1.0L) / 2.0L;
  long double c = b - inv_phi * (b - a);
  long double d = a + inv_phi * (b - a);
  long double fc = f(c);
  long double fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5L * (a + b);
}

}  // namespace

SchottkyPeak schottky_peak(const ModelParams& p, double t_lo, double t_hi) {
  validate(p);
  if (!(t_lo > 0.0) || !(t_hi > t_lo)) throw std::invalid_argument("temperature bracket must satisfy 0 < lo < hi");
  SchottkyPeak out;
  const long double w = p.omega;
  const long double th = p.theta;
  auto flux_term = [&](long double t) {
    const long double y = w * th / t;
    const long double ch = std::cosh(y);
    return y * y / (ch * ch);
  };

  if (p.theta != 0.0) {
    const long double t = golden_section_max(flux_term, t_lo, t_hi, 1e-10L * w);
    // an optimum pinned to the bracket edge is not an interior peak
    if (t - t_lo > 1e-8L * w && t_hi - t > 1e-8L * w) {
      out.has_flux_peak = true;
      out.t_peak = static_cast<double>(t);
      out.c_peak = static_cast<double>(flux_term(t));
      out.x_peak = static_cast<double>(w * std::abs(th) / t);
    }
  }

  ThermoInput in{p, 1.0, E0Mode::paper};
  auto total = [&](long double t) { return static_cast<long double>(heat_capacity(at_temperature(in, static_cast<double>(t)))); };
  const auto grid = log_grid(t_lo, t_hi, 4001);
  std::vector<double> c(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) c[i] = heat_capacity(at_temperature(in, grid[i]));
  std::size_t best = 0;
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    if (c[i] > c[i - 1] && c[i] >= c[i + 1] && (best == 0 || c[i] > c[best])) best = i;
  }
  if (best != 0) {
    const long double t = golden_section_max(total, grid[best - 1], grid[best + 1], 1e-10L * w);
    out.has_total_peak = true;
    out.total_t_peak = static_cast<double>(t);
    out.total_c_peak = static_cast<double>(total(t));
  }
  return out;
}

LimitReport limit_report(const ModelParams& p, E0Mode mode) {
  LimitReport rep;
  const double e0 = ground_energy(p, mode).value;
  const double w = p.omega;
  auto point = [&](double bw) { return evaluate({p, w / bw, mode}); };

  std::map<std::string, std::vector<double>> low;
  for (double bw : {5.0, 10.0, 20.0}) {
    const auto pt = point(bw);
    const double beta = bw / w;
    const double z_ref = 2.0 * std::exp(-beta * e0) * std::cosh(bw * p.theta);
    const double u_ref = e0 - w * std::abs(p.theta);
    rep.rows.push_back({"low_T", "Z", bw, pt.Z, z_ref, std::abs(pt.Z - z_ref) / pt.Z});
    rep.rows.push_back({"low_T", "U", bw, pt.U, u_ref, std::abs(pt.U - u_ref) / w});
    rep.rows.push_back({"low_T", "S", bw, pt.S, 0.0, std::abs(pt.S)});
    rep.rows.push_back({"low_T", "C_V", bw, pt.C_V, 0.0, std::abs(pt.C_V)});
  }
  for (double bw : {0.1, 0.05, 0.02}) {
    const auto pt = point(bw);
    const double z_ref = 1.0 / (2.0 * bw * bw);
    const double u_ref = 2.0 * pt.T;
    rep.rows.push_back({"high_T", "Z", bw, pt.Z, z_ref, std::abs(pt.Z / z_ref - 1.0)});
    rep.rows.push_back({"high_T", "U", bw, pt.U, u_ref, std::abs(pt.U / u_ref - 1.0)});
    rep.rows.push_back({"high_T", "C_V", bw, pt.C_V, 2.0, std::abs(pt.C_V - 2.0)});
  }

  // deviations must shrink as each regime deepens (rows are ordered by depth)
  std::map<std::pair<std::string, std::string>, double> last;
  for (const auto& r : rep.rows) {
    const auto key = std::make_pair(r.regime, r.quantity);
    if (auto it = last.find(key); it != last.end()) {
      const bool improving = r.deviation <= it->second;
      (r.regime == "low_T" ? rep.low_t_monotone : rep.high_t_monotone) &= improving;
    }
    last[key] = r.deviation;
  }
  return rep;
}

std::vector<double> log_grid(double t_min, double t_max, int steps) {
  if (!(t_min > 0.0) || !(t_max >= t_min) || steps < 1) throw std::invalid_argument("invalid temperature grid");
  if (steps == 1) return {t_min};
  std::vector<double> out(steps);
  const double a = std::log(t_min);
  const double b = std::log(t_max);
  for (int i = 0; i < steps; ++i) out[i] = std::exp(a + (b - a) * i / (steps - 1));
  out.front() = t_min;
  out.back() = t_max;
  return out;
}

SweepResult sweep(const SweepAxes& axes) {
  if (axes.temperatures.empty() || axes.thetas.empty() || axes.nus.empty())
    throw std::invalid_argument("sweep axes must be non-empty");
  for (const auto* v : {&axes.temperatures, &axes.thetas, &axes.nus})
    for (std::size_t i = 1; i < v->size(); ++i)
      if (!((*v)[i] > (*v)[i - 1])) throw std::invalid_argument("sweep axes must be strictly increasing");

  SweepResult res;
  res.axes = axes;
  const std::size_t nt = axes.temperatures.size();
  const std::size_t rows = axes.nus.size() * axes.thetas.size();
  res.cells.resize(rows * nt);

  // validate up front so errors surface on the calling thread
  for (double nu : axes.nus)
    for (double th : axes.thetas) validate(constrained_params(axes.sector, nu, th, axes.mass, axes.omega));

  auto fill_row = [&](std::size_t row) {
    const double nu = axes.nus[row / axes.thetas.size()];
    const double th = axes.thetas[row % axes.thetas.size()];
    const auto p = constrained_params(axes.sector, nu, th, axes.mass, axes.omega);
    for (std::size_t k = 0; k < nt; ++k)
      res.cells[row * nt + k] = {nu, th, evaluate({p, axes.temperatures[k], axes.e0_mode})};
  };
  const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, rows);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t row = w; row < rows; row += workers) fill_row(row);
      });
  }
  return res;
}

}  // namespace dunkl::thermo
