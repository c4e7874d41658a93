#ifndef DUNKL_VERIFY_HPP
#define DUNKL_VERIFY_HPP

// Self-verification suites behind `dunkl verify`. Each check compares a
// closed form against an independent numerical route and records the
// observed discrepancy next to its tolerance.

#include <iosfwd>
#include <string>
#include <vector>

namespace dunkl::verify {

enum class Status { pass, fail, info };

struct Check {
  std::string suite;
  std::string name;
  double value = 0.0;      // observed error or reported quantity
  double tolerance = 0.0;  // 0 for informational rows
  Status status = Status::info;
  std::string detail;
};

struct Options {
  /// Added to the analytic radial energy in the ODE residual check.
  double energy_offset = 0.0;
  unsigned seed = 20240611u;
};

struct AngularRow {
  double l = 0.0;
  int sector = +1;
  std::string convention;  // "double_angle" or "printed"
  double eigen_error = 0.0;
  double norm_error = 0.0;
};

struct RadialRow {
  double k_plus = 0.0;
  int n = 0;
  double e_analytic = 0.0;
  double e_numeric = 0.0;
  double abs_error = 0.0;
};

std::vector<Check> specfun_checks(const Options& opt);
std::vector<Check> spectrum_checks(const Options& opt);
std::vector<Check> angular_checks(const Options& opt, std::vector<AngularRow>* rows = nullptr);
std::vector<Check> radial_checks(const Options& opt, std::vector<RadialRow>* rows = nullptr);
std::vector<Check> thermo_checks(const Options& opt);

/// All suites in order specfun, spectrum, angular, radial, thermo.
std::vector<Check> all_checks(const Options& opt);

/// True when no mandatory check failed (info rows never fail).
bool passed(const std::vector<Check>& checks);

std::string to_string(Status s);
void write_checks_csv(std::ostream& os, const std::vector<Check>& checks);
void write_angular_csv(std::ostream& os, const std::vector<AngularRow>& rows);
void write_radial_csv(std::ostream& os, const std::vector<RadialRow>& rows);

}  // namespace dunkl::verify

#endif  // DUNKL_VERIFY_HPP
