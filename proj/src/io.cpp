#include "dunkl/io.hpp"

#include <ostream>

#include <fmt/format.h>

namespace dunkl::io {

std::string csv_double(double v) { return fmt::format("{:.16e}", v); }

std::string csv_index(AngularIndex l) {
  return l.is_integer() ? fmt::format("{}", l.twice() / 2) : fmt::format("{}.5", (l.twice() - 1) / 2);
}

std::string sector_label(Sector s) { return s == Sector::even ? "+1" : "-1"; }

nlohmann::json to_json(const ModelParams& p) {
  return {{"nu1", p.nu1}, {"nu2", p.nu2},     {"sector", sign(p.sector)},
          {"theta", p.theta}, {"mass", p.mass}, {"omega", p.omega}};
}

ModelParams params_from_json(const nlohmann::json& j) {
  ModelParams p;
  p.nu1 = j.at("nu1").get<double>();
  p.nu2 = j.at("nu2").get<double>();
  const int s = j.at("sector").get<int>();
  if (s != 1 && s != -1) throw std::invalid_argument("sector must be +1 or -1");
  p.sector = s == 1 ? Sector::even : Sector::odd;
  p.theta = j.at("theta").get<double>();
  p.mass = j.at("mass").get<double>();
  p.omega = j.at("omega").get<double>();
  return p;
}

void write_spectrum_csv(std::ostream& os, const SpectrumTable& table, double omega) {
  os << "n,l,m_s,branch,K_minus,K_plus,energy_over_omega\n";
  for (const auto& e : table.states) {
    os << e.state.n << ',' << csv_index(e.state.l) << ',' << sign(e.state.spin) << ','
       << (e.state.branch == Branch::plus ? '+' : '-') << ',' << csv_double(e.k_minus) << ',' << csv_double(e.k_plus)
       << ',' << csv_double(e.energy / omega) << '\n';
  }
}

nlohmann::json spectrum_to_json(const SpectrumTable& table, const ModelParams& p) {
  nlohmann::json states = nlohmann::json::array();
  for (const auto& e : table.states) {
    states.push_back({{"n", e.state.n},
                      {"l", e.state.l.value()},
                      {"m_s", sign(e.state.spin)},
                      {"branch", e.state.branch == Branch::plus ? "+" : "-"},
                      {"K_minus", e.k_minus},
                      {"K_plus", e.k_plus},
                      {"energy_over_omega", e.energy / p.omega}});
  }
  return {{"schema_version", kSchemaVersion},
          {"params", to_json(p)},
          {"cutoff_over_omega", table.cutoff / p.omega},
          {"degeneracy_policy", table.policy == DegeneracyPolicy::positive_branch ? "positive_branch" : "both_branches"},
          {"states", std::move(states)}};
}

void write_thermo_csv_header(std::ostream& os) { os << "sector,nu,theta,T,Z,F,U,S,C_V,e0_mode\n"; }

void write_thermo_csv_row(std::ostream& os, Sector sector, double nu, double theta, const thermo::ThermoPoint& pt,
                          thermo::E0Mode mode) {
  os << sector_label(sector) << ',' << csv_double(nu) << ',' << csv_double(theta) << ',' << csv_double(pt.T) << ','
     << csv_double(pt.Z) << ',' << csv_double(pt.F) << ',' << csv_double(pt.U) << ',' << csv_double(pt.S) << ','
     << csv_double(pt.C_V) << ',' << thermo::to_string(mode) << '\n';
}

void write_sweep_csv(std::ostream& os, const thermo::SweepResult& res) {
  write_thermo_csv_header(os);
  for (const auto& c : res.cells) write_thermo_csv_row(os, res.axes.sector, c.nu, c.theta, c.point, res.axes.e0_mode);
}

nlohmann::json sweep_to_json(const thermo::SweepResult& res) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& c : res.cells) {
    points.push_back({{"nu", c.nu},
                      {"theta", c.theta},
                      {"T", c.point.T},
                      {"Z", c.point.Z},
                      {"F", c.point.F},
                      {"U", c.point.U},
                      {"S", c.point.S},
                      {"C_V", c.point.C_V},
                      {"provenance", thermo::to_string(c.point.provenance)}});
  }
  return {{"schema_version", kSchemaVersion},
          {"axes",
           {{"sector", sign(res.axes.sector)},
            {"temperatures", res.axes.temperatures},
            {"thetas", res.axes.thetas},
            {"nus", res.axes.nus},
            {"mass", res.axes.mass},
            {"omega", res.axes.omega}}},
          {"e0_mode", thermo::to_string(res.axes.e0_mode)},
          {"points", std::move(points)}};
}

}  // namespace dunkl::io
