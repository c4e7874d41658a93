#include "dunkl/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "dunkl/errors.hpp"
#include "dunkl/io.hpp"
#include "dunkl/verify.hpp"

namespace dunkl::cli {
namespace fs = std::filesystem;

namespace {

constexpr const char* kOutputEnv = "DUNKL_OUTPUT_DIR";

Subcommand parse_subcommand(const std::string& s) {
  if (s == "spectrum") return Subcommand::spectrum;
  if (s == "thermo") return Subcommand::thermo;
  if (s == "sweep") return Subcommand::sweep;
  if (s == "verify") return Subcommand::verify;
  if (s == "figures") return Subcommand::figures;
  throw std::invalid_argument("unknown subcommand '" + s + "'");
}

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw std::invalid_argument("format must be csv or json, got '" + s + "'");
}

Sector parse_sector(const std::string& s) {
  if (s == "+1" || s == "1" || s == "even") return Sector::even;
  if (s == "-1" || s == "odd") return Sector::odd;
  throw std::invalid_argument("sector must be +1 or -1, got '" + s + "'");
}

std::ofstream open_file(const fs::path& path) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw std::runtime_error(fmt::format("cannot create directory '{}': {}", path.parent_path().string(), ec.message()));
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error(fmt::format("cannot open '{}' for writing", path.string()));
  return f;
}

// Single-file subcommands: --out, else $DUNKL_OUTPUT_DIR/<name>, else stdout.
void emit(const RunConfig& cfg, const std::string& stem, std::ostream& out,
          const std::function<void(std::ostream&)>& write) {
  fs::path target;
  if (!cfg.out.empty()) {
    target = cfg.out;
  } else if (const auto dir = default_output_dir(); !dir.empty()) {
    target = fs::path(dir) / (stem + (cfg.format == Format::csv ? ".csv" : ".json"));
  }
  if (target.empty()) {
    write(out);
    return;
  }
  auto f = open_file(target);
  write(f);
  if (!f) throw std::runtime_error(fmt::format("write to '{}' failed", target.string()));
  out << "wrote " << target.string() << '\n';
}

fs::path output_directory(const RunConfig& cfg) {
  if (!cfg.out.empty()) return cfg.out;
  if (const auto dir = default_output_dir(); !dir.empty()) return dir;
  return ".";
}

double display_nu(const ModelParams& p) { return p.sector == Sector::even ? p.nu1 : sector_nu(p); }

using Column = double thermo::ThermoPoint::*;

void write_figure(std::ostream& os, const std::vector<thermo::SweepResult>& parts, const char* name, Column col) {
  os << "sector,nu,theta,T," << name << ",e0_mode\n";
  for (const auto& res : parts)
    for (const auto& c : res.cells)
      os << io::sector_label(res.axes.sector) << ',' << io::csv_double(c.nu) << ',' << io::csv_double(c.theta) << ','
         << io::csv_double(c.point.T) << ',' << io::csv_double(c.point.*col) << ','
         << thermo::to_string(res.axes.e0_mode) << '\n';
}

}  // namespace

std::string to_string(Subcommand s) {
  switch (s) {
    case Subcommand::spectrum: return "spectrum";
    case Subcommand::thermo: return "thermo";
    case Subcommand::sweep: return "sweep";
    case Subcommand::verify: return "verify";
    case Subcommand::figures: return "figures";
  }
  return "?";
}

std::string to_string(Format f) { return f == Format::csv ? "csv" : "json"; }

nlohmann::json to_json(const RunConfig& cfg) {
  return {{"schema_version", io::kSchemaVersion},
          {"subcommand", to_string(cfg.subcommand)},
          {"verify_section", cfg.verify_section},
          {"params", io::to_json(cfg.params)},
          {"t_min", cfg.t_min},
          {"t_max", cfg.t_max},
          {"t_steps", cfg.t_steps},
          {"thetas", cfg.thetas},
          {"nus", cfg.nus},
          {"cutoff", cfg.cutoff},
          {"both_branches", cfg.both_branches},
          {"e0_mode", thermo::to_string(cfg.e0_mode)},
          {"format", to_string(cfg.format)},
          {"out", cfg.out},
          {"inject_energy_offset", cfg.inject_energy_offset}};
}

RunConfig config_from_json(const nlohmann::json& j) {
  RunConfig cfg;
  if (j.contains("schema_version") && j.at("schema_version").get<int>() != io::kSchemaVersion)
    throw std::invalid_argument("unsupported config schema_version");
  if (j.contains("subcommand")) cfg.subcommand = parse_subcommand(j.at("subcommand").get<std::string>());
  if (j.contains("verify_section")) cfg.verify_section = j.at("verify_section").get<std::string>();
  if (j.contains("params")) cfg.params = io::params_from_json(j.at("params"));
  if (j.contains("t_min")) cfg.t_min = j.at("t_min").get<double>();
  if (j.contains("t_max")) cfg.t_max = j.at("t_max").get<double>();
  if (j.contains("t_steps")) cfg.t_steps = j.at("t_steps").get<int>();
  if (j.contains("thetas")) cfg.thetas = j.at("thetas").get<std::vector<double>>();
  if (j.contains("nus")) cfg.nus = j.at("nus").get<std::vector<double>>();
  if (j.contains("cutoff")) cfg.cutoff = j.at("cutoff").get<double>();
  if (j.contains("both_branches")) cfg.both_branches = j.at("both_branches").get<bool>();
  if (j.contains("e0_mode")) cfg.e0_mode = thermo::parse_e0_mode(j.at("e0_mode").get<std::string>());
  if (j.contains("format")) cfg.format = parse_format(j.at("format").get<std::string>());
  if (j.contains("out")) cfg.out = j.at("out").get<std::string>();
  if (j.contains("inject_energy_offset")) cfg.inject_energy_offset = j.at("inject_energy_offset").get<double>();
  return cfg;
}

void validate(const RunConfig& cfg) {
  dunkl::validate(cfg.params);
  if (const auto c = check_constraint(cfg.params); !c) throw constraint_error(c.diagnostic);
  if (!(cfg.t_min > 0.0) || !(cfg.t_max >= cfg.t_min) || !std::isfinite(cfg.t_max))
    throw std::invalid_argument("temperatures need 0 < tmin <= tmax");
  if (cfg.t_steps < 1) throw std::invalid_argument("tsteps must be at least 1");
  if (cfg.t_steps == 1 && cfg.t_max != cfg.t_min) throw std::invalid_argument("tsteps = 1 needs tmin = tmax");
  if (cfg.thetas.empty()) throw std::invalid_argument("theta grid is empty");
  if (cfg.nus.empty()) throw std::invalid_argument("nu grid is empty");
  if (!(cfg.cutoff > 0.0) || !std::isfinite(cfg.cutoff)) throw std::invalid_argument("cutoff must be positive");
  const std::vector<std::string> sections{"all", "specfun", "spectrum", "angular", "radial", "thermo"};
  if (std::find(sections.begin(), sections.end(), cfg.verify_section) == sections.end())
    throw std::invalid_argument("unknown verify section '" + cfg.verify_section + "'");
  if (cfg.subcommand == Subcommand::sweep)
    for (double nu : cfg.nus)
      for (double th : cfg.thetas)
        dunkl::validate(constrained_params(cfg.params.sector, nu, th, cfg.params.mass, cfg.params.omega));
}

std::string default_output_dir() {
  const char* env = std::getenv(kOutputEnv);
  return env ? std::string(env) : std::string();
}

int run_spectrum(const RunConfig& cfg, std::ostream& out) {
  const auto policy = cfg.both_branches ? DegeneracyPolicy::both_branches : DegeneracyPolicy::positive_branch;
  const auto table = enumerate(cfg.params, cfg.cutoff * cfg.params.omega, policy);
  emit(cfg, "spectrum", out, [&](std::ostream& os) {
    if (cfg.format == Format::csv)
      io::write_spectrum_csv(os, table, cfg.params.omega);
    else
      os << io::spectrum_to_json(table, cfg.params).dump(2) << '\n';
  });
  return kOk;
}

int run_thermo(const RunConfig& cfg, std::ostream& out) {
  const auto temps = thermo::log_grid(cfg.t_min, cfg.t_max, cfg.t_steps);
  std::vector<thermo::ThermoPoint> points;
  points.reserve(temps.size());
  for (double t : temps) points.push_back(thermo::evaluate({cfg.params, t, cfg.e0_mode}));
  const double nu = display_nu(cfg.params);
  emit(cfg, "thermo", out, [&](std::ostream& os) {
    if (cfg.format == Format::csv) {
      io::write_thermo_csv_header(os);
      for (const auto& pt : points) io::write_thermo_csv_row(os, cfg.params.sector, nu, cfg.params.theta, pt, cfg.e0_mode);
      return;
    }
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& pt : points)
      rows.push_back({{"T", pt.T}, {"Z", pt.Z}, {"F", pt.F}, {"U", pt.U}, {"S", pt.S}, {"C_V", pt.C_V}});
    os << nlohmann::json{{"schema_version", io::kSchemaVersion},
                         {"params", io::to_json(cfg.params)},
                         {"e0_mode", thermo::to_string(cfg.e0_mode)},
                         {"points", rows}}
              .dump(2)
       << '\n';
  });
  return kOk;
}

int run_sweep(const RunConfig& cfg, std::ostream& out) {
  thermo::SweepAxes axes{thermo::log_grid(cfg.t_min, cfg.t_max, cfg.t_steps), cfg.thetas, cfg.nus,
                         cfg.params.sector, cfg.e0_mode, cfg.params.mass, cfg.params.omega};
  const auto res = thermo::sweep(axes);
  emit(cfg, "sweep", out, [&](std::ostream& os) {
    if (cfg.format == Format::csv)
      io::write_sweep_csv(os, res);
    else
      os << io::sweep_to_json(res).dump(2) << '\n';
  });
  return kOk;
}

int run_figures(const RunConfig& cfg, std::ostream& out) {
  const auto temps = thermo::log_grid(cfg.t_min, cfg.t_max, cfg.t_steps);
  const auto make = [&](Sector s, std::vector<double> nus) {
    return thermo::sweep({temps, cfg.thetas, std::move(nus), s, cfg.e0_mode, cfg.params.mass, cfg.params.omega});
  };
  // the even sector needs |nu| < 1/2; its thermodynamics does not depend on nu
  const auto even = make(Sector::even, {0.0});
  const auto odd = make(Sector::odd, cfg.nus);

  const fs::path dir = output_directory(cfg);
  struct Figure {
    const char* file;
    std::vector<thermo::SweepResult> parts;
    const char* column;
    Column member;
  };
  const std::vector<Figure> figures = {
      {"partition_even.csv", {even}, "Z", &thermo::ThermoPoint::Z},
      {"partition_odd.csv", {odd}, "Z", &thermo::ThermoPoint::Z},
      {"internal_energy_even.csv", {even}, "U", &thermo::ThermoPoint::U},
      {"internal_energy_odd.csv", {odd}, "U", &thermo::ThermoPoint::U},
      {"entropy.csv", {even, odd}, "S", &thermo::ThermoPoint::S},
      {"heat_capacity.csv", {even, odd}, "C_V", &thermo::ThermoPoint::C_V},
  };
  for (const auto& f : figures) {
    const auto path = dir / f.file;
    auto os = open_file(path);
    write_figure(os, f.parts, f.column, f.member);
    if (!os) throw std::runtime_error(fmt::format("write to '{}' failed", path.string()));
    out << "wrote " << path.string() << '\n';
  }
  return kOk;
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
  verify::Options opt;
  opt.energy_offset = cfg.inject_energy_offset;
  std::vector<verify::AngularRow> angular_rows;
  std::vector<verify::RadialRow> radial_rows;
  const auto& s = cfg.verify_section;
  std::vector<verify::Check> checks;
  auto add = [&](std::vector<verify::Check> part) { checks.insert(checks.end(), part.begin(), part.end()); };
  if (s == "all" || s == "specfun") add(verify::specfun_checks(opt));
  if (s == "all" || s == "spectrum") add(verify::spectrum_checks(opt));
  if (s == "all" || s == "angular") add(verify::angular_checks(opt, &angular_rows));
  if (s == "all" || s == "radial") add(verify::radial_checks(opt, &radial_rows));
  if (s == "all" || s == "thermo") add(verify::thermo_checks(opt));

  const fs::path dir = output_directory(cfg);
  {
    auto os = open_file(dir / "verify_report.csv");
    verify::write_checks_csv(os, checks);
  }
  if (!angular_rows.empty()) {
    auto os = open_file(dir / "verify_angular.csv");
    verify::write_angular_csv(os, angular_rows);
  }
  if (!radial_rows.empty()) {
    auto os = open_file(dir / "verify_radial.csv");
    verify::write_radial_csv(os, radial_rows);
  }

  int failures = 0;
  for (const auto& c : checks) {
    if (c.status == verify::Status::fail) ++failures;
    out << fmt::format("{:<5} {:<9} {:<58} {:>12.4e}", verify::to_string(c.status), c.suite, c.name, c.value);
    if (c.status != verify::Status::info) out << fmt::format("  (tol {:.1e})", c.tolerance);
    if (!c.detail.empty()) out << "  " << c.detail;
    out << '\n';
  }
  out << fmt::format("{} checks, {} failed; report in {}\n", checks.size(), failures, (dir / "verify_report.csv").string());
  return failures == 0 ? kOk : kVerifyFailed;
}

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate(cfg);
    switch (cfg.subcommand) {
      case Subcommand::spectrum: return run_spectrum(cfg, out);
      case Subcommand::thermo: return run_thermo(cfg, out);
      case Subcommand::sweep: return run_sweep(cfg, out);
      case Subcommand::figures: return run_figures(cfg, out);
      case Subcommand::verify: return run_verify(cfg, out);
    }
  } catch (const constraint_error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kInvalid;
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectrum and thermodynamics of the Dunkl-Pauli oscillator in an Aharonov-Bohm flux.\n"
               "Units: hbar = c = k_B = 1; energies and temperatures are absolute."};
  app.fallthrough();
  app.require_subcommand(1);

  std::vector<std::function<void(RunConfig&)>> apply;
  const auto bind = [&](auto* opt, auto setter) {
    apply.push_back([opt, setter](RunConfig& c) {
      if (opt->count() > 0) setter(c);
    });
  };

  std::string sector, e0_mode, format, out_path, config_path;
  double nu1 = 0, nu2 = 0, theta = 0, omega = 1, mass = 1, tmin = 0, tmax = 0, cutoff = 0, inject = 0;
  int tsteps = 0;
  std::vector<double> thetas, nus;
  bool strict = false, dump = false;

  bind(app.add_option("--sector", sector, "reflection sector epsilon")->check(CLI::IsMember({"+1", "1", "-1", "even", "odd"})),
       [&](RunConfig& c) { c.params.sector = parse_sector(sector); });
  bind(app.add_option("--nu1", nu1, "Wigner parameter nu1 (> -1/2)"), [&](RunConfig& c) { c.params.nu1 = nu1; });
  bind(app.add_option("--nu2", nu2, "Wigner parameter nu2 (> -1/2)"), [&](RunConfig& c) { c.params.nu2 = nu2; });
  bind(app.add_option("--theta", theta, "Aharonov-Bohm flux (dimensionless)"), [&](RunConfig& c) { c.params.theta = theta; });
  bind(app.add_option("--omega", omega, "oscillator frequency (default 1)"), [&](RunConfig& c) { c.params.omega = omega; });
  bind(app.add_option("--mass", mass, "mass (default 1)"), [&](RunConfig& c) { c.params.mass = mass; });
  bind(app.add_option("--tmin", tmin, "lowest temperature"), [&](RunConfig& c) { c.t_min = tmin; });
  bind(app.add_option("--tmax", tmax, "highest temperature"), [&](RunConfig& c) { c.t_max = tmax; });
  bind(app.add_option("--tsteps", tsteps, "number of log-spaced temperatures"), [&](RunConfig& c) { c.t_steps = tsteps; });
  bind(app.add_option("--thetas", thetas, "flux grid for sweep/figures (comma separated)")->delimiter(','),
       [&](RunConfig& c) { c.thetas = thetas; });
  bind(app.add_option("--nus", nus, "nu grid for sweep/figures (comma separated)")->delimiter(','),
       [&](RunConfig& c) { c.nus = nus; });
  bind(app.add_option("--cutoff", cutoff, "spectrum energy cutoff in units of omega"), [&](RunConfig& c) { c.cutoff = cutoff; });
  bind(app.add_flag("--both-branches", strict, "count both lambda branches in the spectrum"),
       [&](RunConfig& c) { c.both_branches = strict; });
  bind(app.add_option("--e0-mode", e0_mode, "ground-energy convention")->check(CLI::IsMember({"paper", "enumerated"})),
       [&](RunConfig& c) { c.e0_mode = thermo::parse_e0_mode(e0_mode); });
  bind(app.add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"})),
       [&](RunConfig& c) { c.format = parse_format(format); });
  bind(app.add_option("--out", out_path, fmt::format("output file or directory (default ${} or stdout)", kOutputEnv)),
       [&](RunConfig& c) { c.out = out_path; });
  bind(app.add_option("--inject-energy-offset", inject, "test hook: shift the energy in the radial residual check"),
       [&](RunConfig& c) { c.inject_energy_offset = inject; });
  app.add_option("--config", config_path, "JSON config; flags given on the command line override it");
  app.add_flag("--dump-config", dump, "print the resolved config as JSON and exit");

  std::string section = "all";
  for (const char* name : {"spectrum", "thermo", "sweep", "figures"}) app.add_subcommand(name, "");
  app.get_subcommand("spectrum")->description("enumerate the spectrum below the cutoff");
  app.get_subcommand("thermo")->description("closed-form thermodynamics on a temperature grid");
  app.get_subcommand("sweep")->description("thermodynamics over (nu, theta, T) on the constraint surface");
  app.get_subcommand("figures")->description("data files for Z, U, S and C_V versus T");
  auto* verify_cmd = app.add_subcommand("verify", "run the self-verification suites");
  auto* section_opt = verify_cmd->add_option("section", section, "all, specfun, spectrum, angular, radial or thermo")
                          ->check(CLI::IsMember({"all", "specfun", "spectrum", "angular", "radial", "thermo"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  }

  RunConfig cfg;
  try {
    if (!config_path.empty()) {
      std::ifstream f(config_path);
      if (!f) throw std::runtime_error(fmt::format("cannot read config '{}'", config_path));
      cfg = config_from_json(nlohmann::json::parse(f));
    }
    cfg.subcommand = parse_subcommand(app.get_subcommands().front()->get_name());
    if (section_opt->count() > 0) cfg.verify_section = section;
    for (const auto& a : apply) a(cfg);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }

  if (dump) {
    out << to_json(cfg).dump(2) << '\n';
    return kOk;
  }
  return execute(cfg, out, err);
}

}  // namespace dunkl::cli
