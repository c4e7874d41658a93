#ifndef DUNKL_CLI_HPP
#define DUNKL_CLI_HPP

// Command-line front end. Units: hbar = c = k_B = 1; energies and
// temperatures are absolute (omega is passed explicitly).

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "dunkl/spectrum.hpp"
#include "dunkl/thermo.hpp"

namespace dunkl::cli {

enum class Subcommand { spectrum, thermo, sweep, verify, figures };
enum class Format { csv, json };

std::string to_string(Subcommand s);
std::string to_string(Format f);

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kInvalid = 2;

struct RunConfig {
  Subcommand subcommand = Subcommand::spectrum;
  std::string verify_section = "all";  // all, specfun, spectrum, angular, radial, thermo
  ModelParams params;
  double t_min = 0.01;
  double t_max = 1000.0;
  int t_steps = 121;
  std::vector<double> thetas{-0.4, 0.0, 0.5, 1.0};
  std::vector<double> nus{0.0, 0.25, 0.5, 1.0};
  double cutoff = 30.0;  // in units of omega
  bool both_branches = false;
  thermo::E0Mode e0_mode = thermo::E0Mode::paper;
  Format format = Format::csv;
  std::string out;  // file for spectrum/thermo/sweep, directory for figures/verify
  double inject_energy_offset = 0.0;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

nlohmann::json to_json(const RunConfig& cfg);
RunConfig config_from_json(const nlohmann::json& j);

/// Throws std::invalid_argument (or constraint_error) describing the first
/// inconsistency: non-empty grids, positive temperatures, sector/nu
/// compatibility with every flux on the grid.
void validate(const RunConfig& cfg);

/// Where output lands when --out is absent: $DUNKL_OUTPUT_DIR, or "" (stdout
/// for single-file subcommands, the working directory otherwise).
std::string default_output_dir();

int run_spectrum(const RunConfig& cfg, std::ostream& out);
int run_thermo(const RunConfig& cfg, std::ostream& out);
int run_sweep(const RunConfig& cfg, std::ostream& out);
/// Writes partition_even.csv, partition_odd.csv, internal_energy_even.csv,
/// internal_energy_odd.csv, entropy.csv and heat_capacity.csv.
int run_figures(const RunConfig& cfg, std::ostream& out);
int run_verify(const RunConfig& cfg, std::ostream& out);

/// Validates and dispatches; maps errors to exit codes.
int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full entry point: flag parsing, --config, --dump-config, dispatch.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace dunkl::cli

#endif  // DUNKL_CLI_HPP
