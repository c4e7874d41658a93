#ifndef DUNKL_IO_HPP
#define DUNKL_IO_HPP

// CSV and JSON serialization. CSV floats use fixed 17-significant-digit
// scientific notation; JSON floats use the shortest round-trip form.

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "dunkl/spectrum.hpp"
#include "dunkl/thermo.hpp"

namespace dunkl::io {

inline constexpr int kSchemaVersion = 1;

/// "%.16e"
std::string csv_double(double v);
/// Quantum numbers: integers and half-integers, e.g. "2" or "1.5".
std::string csv_index(AngularIndex l);
std::string sector_label(Sector s);  // "+1" / "-1"

nlohmann::json to_json(const ModelParams& p);
ModelParams params_from_json(const nlohmann::json& j);

/// Columns: n, l, m_s, branch, K_minus, K_plus, energy_over_omega.
void write_spectrum_csv(std::ostream& os, const SpectrumTable& table, double omega);
nlohmann::json spectrum_to_json(const SpectrumTable& table, const ModelParams& p);

/// Columns: sector, nu, theta, T, Z, F, U, S, C_V, e0_mode.
void write_thermo_csv_header(std::ostream& os);
void write_thermo_csv_row(std::ostream& os, Sector sector, double nu, double theta, const thermo::ThermoPoint& pt,
                          thermo::E0Mode mode);
void write_sweep_csv(std::ostream& os, const thermo::SweepResult& res);
nlohmann::json sweep_to_json(const thermo::SweepResult& res);

}  // namespace dunkl::io

#endif  // DUNKL_IO_HPP
