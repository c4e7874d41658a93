#ifndef DUNKL_THERMO_HPP
#define DUNKL_THERMO_HPP

// Canonical thermodynamics of the constrained spectrum. Closed forms follow
//   Z = 2 e^{-beta E0} cosh(beta omega theta) / (1 - e^{-2 beta omega})^2
// and everything else is derived from ln Z. Temperatures are in units where
// k_B = 1.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dunkl/spectrum.hpp"

namespace dunkl::thermo {

enum class E0Mode { paper, enumerated };

std::string to_string(E0Mode mode);
E0Mode parse_e0_mode(const std::string& text);

struct ThermoInput {
  ModelParams params;
  double temperature = 1.0;
  E0Mode e0_mode = E0Mode::enumerated;
};

enum class Provenance { closed_form, spectral_sum, finite_difference };
std::string to_string(Provenance p);

struct ThermoPoint {
  double T = 0.0;
  double Z = 0.0;
  double F = 0.0;
  double U = 0.0;
  double S = 0.0;
  double C_V = 0.0;
  Provenance provenance = Provenance::closed_form;
};

struct GroundEnergy {
  double value = 0.0;
  /// E_min(m_s) + omega theta m_s for m_s = +1, -1 (enumerated mode only).
  std::array<double, 2> per_spin{};
  /// Both spins share one offset, so the closed form is exact.
  bool spin_consistent = true;
  E0Mode mode = E0Mode::enumerated;
};

/// paper: omega (1 + 2 l0) (even) or 2 omega (l0 + nu + 3/2) (odd) with the
/// aggregated l0. enumerated: offset read off the admissible ground states;
/// when the two spins disagree, a least-squares fit of
/// ln Z_sum + 2 ln(1 - e^{-2 beta omega}) - ln(2 cosh beta omega theta) = -beta E0
/// over beta omega in [0.2, 5].
GroundEnergy ground_energy(const ModelParams& p, E0Mode mode);

double log_partition_closed(const ThermoInput& in);
double partition_closed(const ThermoInput& in);
double free_energy(const ThermoInput& in);
/// U = E0 - omega theta tanh(beta omega theta) + 4 omega / (e^{2 beta omega} - 1)
double internal_energy(const ThermoInput& in);
/// S = ln(2 cosh y) - 2 ln(1 - e^{-2b}) - y tanh y + 4b / (e^{2b} - 1), y = b theta, b = beta omega.
double entropy(const ThermoInput& in);
/// C_V = b^2 [theta^2 sech^2(b theta) + 2 csch^2(b)]
double heat_capacity(const ThermoInput& in);

ThermoPoint evaluate(const ThermoInput& in);

struct PartitionSum {
  double value = 0.0;         // explicit + ladder continuation (+ l-tail when exact)
  double log_value = 0.0;
  double explicit_sum = 0.0;  // states with E <= cutoff only
  double ladder_tail = 0.0;   // n-continuation of every enumerated column
  double l_tail = 0.0;        // columns whose lowest state exceeds the cutoff
  bool l_tail_exact = true;   // l-ladders affine with step 2 omega
  double tail_bound = 0.0;    // certified bound on what value omits
  std::size_t states = 0;
};

/// Boltzmann sum over the enumerated spectrum below cutoff. Every column
/// (l, m_s) is continued along its exactly spaced n-ladder; columns above the
/// cutoff are summed geometrically when the l-ladder is affine, otherwise
/// bounded (cutoff_error if the bound exceeds 1e-12 of the sum).
PartitionSum partition_sum(const ModelParams& p, double beta, double cutoff);

/// Point from the spectral sum: Z direct, U and C_V from Richardson
/// derivatives of ln Z_sum in beta.
ThermoPoint spectral_sum_point(const ModelParams& p, double temperature, double cutoff);

/// U = -d ln Z / d beta and C_V = dU/dT by Richardson-extrapolated central
/// differences of the closed forms.
ThermoPoint finite_difference_point(const ThermoInput& in);

// ---------------------------------------------------------------------------

/// Root of x tanh x = 1 (stationary point of x^2 sech^2 x), by Newton.
double flux_peak_abscissa();

struct SchottkyPeak {
  bool has_flux_peak = false;
  double t_peak = 0.0;   // maximizer of the flux term in T
  double c_peak = 0.0;   // flux-term value there
  double x_peak = 0.0;   // omega |theta| / t_peak
  bool has_total_peak = false;
  double total_t_peak = 0.0;
  double total_c_peak = 0.0;
};

/// Golden-section maximization of (omega/T)^2 theta^2 sech^2(omega theta / T)
/// over T in [t_lo, t_hi] (tolerance 1e-10 in T/omega), plus the largest
/// interior local maximum of the total C_V if one exists.
SchottkyPeak schottky_peak(const ModelParams& p, double t_lo, double t_hi);

struct LimitRow {
  std::string regime;    // "low_T" or "high_T"
  std::string quantity;  // Z, U, S, C_V
  double beta_omega = 0.0;
  double value = 0.0;
  double reference = 0.0;
  double deviation = 0.0;
};

struct LimitReport {
  std::vector<LimitRow> rows;
  bool low_t_monotone = true;   // deviations shrink as beta omega grows
  bool high_t_monotone = true;  // deviations shrink as beta omega falls
};

/// Low-T rows at beta omega in {5, 10, 20}, high-T rows at {0.1, 0.05, 0.02}.
LimitReport limit_report(const ModelParams& p, E0Mode mode);

// ---------------------------------------------------------------------------

struct SweepAxes {
  std::vector<double> temperatures;
  std::vector<double> thetas;
  std::vector<double> nus;
  Sector sector = Sector::even;
  E0Mode e0_mode = E0Mode::paper;
  double mass = 1.0;
  double omega = 1.0;
};

struct SweepCell {
  double nu = 0.0;
  double theta = 0.0;
  ThermoPoint point;
};

struct SweepResult {
  SweepAxes axes;
  /// Row-major over (nu, theta, T).
  std::vector<SweepCell> cells;
};

/// Log-spaced grid of `steps` temperatures in [t_min, t_max].
std::vector<double> log_grid(double t_min, double t_max, int steps);

/// Evaluates every (nu, theta, T) cell on the constraint surface of the
/// sector; rows are computed concurrently, output order is deterministic.
SweepResult sweep(const SweepAxes& axes);

}  // namespace dunkl::thermo

#endif  // DUNKL_THERMO_HPP
