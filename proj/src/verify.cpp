#include "dunkl/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <ostream>
#include <random>

#include <fmt/format.h>

#include "dunkl/angular.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/io.hpp"
#include "dunkl/radial.hpp"
#include "dunkl/specfun.hpp"
#include "dunkl/spectrum.hpp"
#include "dunkl/thermo.hpp"

namespace dunkl::verify {
namespace {

using angular::cplx;

Check mandatory(std::string suite, std::string name, double value, double tol, std::string detail = {}) {
  return {std::move(suite), std::move(name), value, tol, value <= tol ? Status::pass : Status::fail,
          std::move(detail)};
}

Check info(std::string suite, std::string name, double value, std::string detail = {}) {
  return {std::move(suite), std::move(name), value, 0.0, Status::info, std::move(detail)};
}

double laguerre_series(int n, double alpha, double x) {
  double sum = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double log_binom = std::lgamma(n + alpha + 1.0) - std::lgamma(n - k + 1.0) - std::lgamma(alpha + k + 1.0);
    const double term = std::exp(log_binom - std::lgamma(k + 1.0)) * std::pow(x, k);
    sum += (k % 2 == 0 ? term : -term);
  }
  return sum;
}

double sup_norm(std::span<const cplx> v) {
  double m = 0.0;
  for (const auto& z : v) m = std::max(m, std::abs(z));
  return m;
}

// Gauss-Legendre panels on [0, r_max] for the radial normalization integrals
double radial_overlap(const radial::RadialState& a, const radial::RadialState& b, double r_max) {
  static const auto rule = angular::gauss_jacobi(20, 0.0, 0.0);
  constexpr int kPanels = 60;
  const double width = r_max / kPanels;
  double acc = 0.0;
  for (int p = 0; p < kPanels; ++p) {
    const double mid = (p + 0.5) * width;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      const double r = mid + 0.5 * width * rule.nodes[k];
      acc += 0.5 * width * rule.weights[k] * radial::radial_eigenfunction(a, r) * radial::radial_eigenfunction(b, r);
    }
  }
  return acc;
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::info: return "info";
  }
  return "?";
}

std::vector<Check> specfun_checks(const Options&) {
  std::vector<Check> out;
  const std::string suite = "specfun";

  {
    const double rec = specfun::laguerre(6, 1.25, 3.1);
    const double ser = laguerre_series(6, 1.25, 3.1);
    out.push_back(mandatory(suite, "laguerre_vs_series", std::abs(rec - ser) / std::abs(ser), 1e-12));
  }
  {
    double worst = 0.0;
    for (int n = 0; n <= 10; ++n)
      for (double x : {-0.9, -0.3, 0.2, 0.75, 1.6}) {
        const double lhs = specfun::jacobi(n, {1.1, 0.3}, -x);
        const double rhs = (n % 2 == 0 ? 1.0 : -1.0) * specfun::jacobi(n, {0.3, 1.1}, x);
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
      }
    out.push_back(mandatory(suite, "jacobi_reflection_symmetry", worst, 1e-12));
  }
  {
    double worst = 0.0;
    for (double x = 0.5; x <= 100.0; x += 0.37)
      worst = std::max(worst, std::abs(specfun::log_gamma(x + 1.0) - specfun::log_gamma(x) - std::log(x)));
    out.push_back(mandatory(suite, "log_gamma_functional_equation", worst, 1e-12));
  }
  {
    // unit norm of each reflection component under the Dunkl weight
    const double nu1 = 0.3, nu2 = -0.3;
    const angular::DunklQuadrature quad(nu1, nu2, 48);
    const auto a = specfun::angular_norm_even(2, nu1, nu2);
    const cplx even = quad.integrate([&](double phi) {
      const double v = a.primary * specfun::jacobi(2, {nu1 - 0.5, nu2 - 0.5}, -std::cos(2.0 * phi));
      return cplx(v * v);
    });
    const cplx odd = quad.integrate([&](double phi) {
      const double v = a.secondary * std::sin(phi) * std::cos(phi) *
                       specfun::jacobi(1, {nu1 + 0.5, nu2 + 0.5}, -std::cos(2.0 * phi));
      return cplx(v * v);
    });
    out.push_back(mandatory(suite, "A_l_unit_norm(l=2,nu=0.3,-0.3)",
                            std::max(std::abs(even - 1.0), std::abs(odd - 1.0)), 1e-8));
  }
  for (double nu : {0.0, 0.25}) {
    const angular::DunklQuadrature quad(nu, nu, 48);
    for (double l : {0.5, 1.5, 2.5}) {
      const int deg = static_cast<int>(l - 0.5);
      const auto b = specfun::angular_norm_odd(l, nu, nu);
      const cplx cos_norm = quad.integrate([&](double phi) {
        const double v = b.primary * std::cos(phi) * specfun::jacobi(deg, {nu + 0.5, nu - 0.5}, -std::cos(2.0 * phi));
        return cplx(v * v);
      });
      const cplx sin_norm = quad.integrate([&](double phi) {
        const double v = b.secondary * std::sin(phi) * specfun::jacobi(deg, {nu - 0.5, nu + 0.5}, -std::cos(2.0 * phi));
        return cplx(v * v);
      });
      out.push_back(mandatory(suite, fmt::format("B_l_unit_norm(l={},nu={})", l, nu),
                              std::max(std::abs(cos_norm - 1.0), std::abs(sin_norm - 1.0)), 1e-8));
      const auto printed = specfun::angular_norm_odd_printed(l, nu, nu);
      out.push_back(info(suite, fmt::format("B_l_printed/canonical-1(l={},nu={})", l, nu),
                         printed.primary / b.primary - 1.0));
      out.push_back(info(suite, fmt::format("B'_l_printed/canonical-1(l={},nu={})", l, nu),
                         printed.secondary / b.secondary - 1.0));
    }
  }
  return out;
}

std::vector<Check> spectrum_checks(const Options&) {
  std::vector<Check> out;
  const std::string suite = "spectrum";
  {
    const ModelParams p;
    const auto table = enumerate(p, 30.0);
    double worst = 0.0;
    for (const auto& e : table.states)
      worst = std::max(worst, std::abs(e.energy - (2.0 * e.state.n + 2.0 * e.state.l.value() + 1.0)));
    out.push_back(mandatory(suite, "reduction_to_standard_oscillator", worst, 0.0));
  }
  {
    double worst = 0.0;
    for (double theta : {-2.5, -0.4, 0.5, 1.0, 4.2})
      for (Sector s : {Sector::even, Sector::odd}) {
        const auto p = constrained_params(s, 0.3, theta);
        for (const auto& e : enumerate(p, 25.0).states)
          worst = std::max(worst, std::abs(e.k_plus - e.k_minus + theta * sign(e.state.spin)));
      }
    out.push_back(mandatory(suite, "K_relation", worst, 1e-12));
  }
  {
    ModelParams bad = constrained_params(Sector::even, 0.4, 1.0);
    bad.nu2 = 0.4;
    bool rejected = false;
    try {
      (void)energy(bad, {0, AngularIndex::from_twice(2), Spin::up, Branch::plus});
    } catch (const constraint_error&) {
      rejected = true;
    }
    out.push_back(mandatory(suite, "constraint_gate", rejected ? 0.0 : 1.0, 0.0));
  }
  return out;
}

std::vector<Check> angular_checks(const Options& opt, std::vector<AngularRow>* rows) {
  std::vector<Check> out;
  const std::string suite = "angular";
  struct Case {
    double nu1, nu2;
    Sector sector;
    double l;
  };
  const std::vector<Case> cases = {
      {0.3, -0.3, Sector::even, 1.0},  {0.3, -0.3, Sector::even, 2.0},  {0.3, -0.3, Sector::even, 3.0},
      {0.2, 0.45, Sector::even, 2.0},  {0.25, 0.25, Sector::odd, 0.5}, {0.25, 0.25, Sector::odd, 1.5},
      {0.25, 0.25, Sector::odd, 2.5},  {0.1, 0.3, Sector::odd, 1.5},
  };
  for (auto conv : {angular::JacobiArgument::double_angle, angular::JacobiArgument::printed}) {
    const bool primary = conv == angular::JacobiArgument::double_angle;
    const std::string conv_name = primary ? "double_angle" : "printed";
    double worst_eigen = 0.0;
    double worst_norm = 0.0;
    for (const auto& c : cases) {
      ModelParams p;
      p.nu1 = c.nu1;
      p.nu2 = c.nu2;
      p.sector = c.sector;
      const angular::AngularGrid grid(512, c.nu1, c.nu2);
      const angular::DunklQuadrature quad(c.nu1, c.nu2, 64);
      const auto l = AngularIndex::from_value(c.l);
      for (Branch br : {Branch::plus, Branch::minus}) {
        const auto phi = angular::build_phi(p, l, br, grid, conv);
        const auto jphi = angular::apply_J(phi, grid);
        const double lam = lambda_eps(p, l, br);
        std::vector<cplx> diff(phi.values.size());
        for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = jphi.values[i] - lam * phi.values[i];
        const double eigen = sup_norm(diff) / sup_norm(phi.values);
        auto f = [&](double a) { return angular::evaluate_phi(p, l, br, a, conv); };
        const double norm = std::abs(quad.inner_product(f, f) - 1.0);
        worst_eigen = std::max(worst_eigen, eigen);
        worst_norm = std::max(worst_norm, norm);
        if (rows) rows->push_back({c.l, sign(c.sector), conv_name, eigen, norm});
      }
    }
    if (primary) {
      out.push_back(mandatory(suite, "eigen_relation_" + conv_name, worst_eigen, 1e-6));
      out.push_back(mandatory(suite, "unit_norm_" + conv_name, worst_norm, 1e-8));
    } else {
      out.push_back(info(suite, "eigen_relation_" + conv_name, worst_eigen, "as-typeset Jacobi argument"));
      out.push_back(info(suite, "unit_norm_" + conv_name, worst_norm, "as-typeset Jacobi argument"));
    }
  }

  {
    // orthogonality within sector and branch
    double worst = 0.0;
    for (const auto& [nu1, nu2, sector] : {std::tuple{0.3, -0.3, Sector::even}, std::tuple{0.25, 0.25, Sector::odd}}) {
      ModelParams p;
      p.nu1 = nu1;
      p.nu2 = nu2;
      p.sector = sector;
      const angular::DunklQuadrature quad(nu1, nu2, 64);
      const auto first = first_index(sector);
      for (AngularIndex a = first; a.value() < first.value() + 4; a = a.next())
        for (AngularIndex b = a.next(); b.value() < first.value() + 4; b = b.next()) {
          auto fa = [&](double x) { return angular::evaluate_phi(p, a, Branch::plus, x); };
          auto fb = [&](double x) { return angular::evaluate_phi(p, b, Branch::plus, x); };
          worst = std::max(worst, std::abs(quad.inner_product(fa, fb)));
        }
    }
    out.push_back(mandatory(suite, "orthogonality", worst, 1e-8));
  }

  {
    // J^2 = 2B + 2 nu1 nu2 (1 - R1 R2) on random band-limited functions
    std::mt19937 rng(opt.seed);
    std::normal_distribution<double> gauss;
    const double nu1 = 0.35, nu2 = 0.2;
    const angular::AngularGrid grid(512, nu1, nu2);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<cplx> coeff(25);
      for (auto& c : coeff) c = {gauss(rng), gauss(rng)};
      angular::AngularFunction f;
      f.values.resize(grid.size());
      for (int i = 0; i < grid.size(); ++i) {
        cplx v = 0.0;
        for (int k = -12; k <= 12; ++k) v += coeff[k + 12] * std::exp(cplx(0.0, k * grid.phi(i)));
        f.values[i] = v;
      }
      const auto jj = angular::apply_J(angular::apply_J(f, grid), grid);
      const auto b = angular::apply_B(f, grid);
      const auto rr = angular::reflect_x(angular::reflect_y(f.values, grid), grid);
      std::vector<cplx> diff(f.values.size());
      for (std::size_t i = 0; i < diff.size(); ++i)
        diff[i] = jj.values[i] - 2.0 * b.values[i] - 2.0 * nu1 * nu2 * (f.values[i] - rr[i]);
      worst = std::max(worst, sup_norm(diff) / sup_norm(f.values));
    }
    out.push_back(mandatory(suite, "J2_identity_random", worst, 1e-6));
  }

  {
    // deformed Heisenberg algebra [D, x] = 1 + 2 nu R on a polynomial
    const angular::SymmetricGrid1D g(16, 1.5);
    const double nu = 0.37;
    std::vector<double> f(g.size()), xf(g.size());
    for (int i = 0; i < g.size(); ++i) {
      const double x = g.x()[i];
      f[i] = 0.3 - 1.2 * x + 0.7 * x * x + 0.4 * std::pow(x, 3) - 0.25 * std::pow(x, 5) + 0.1 * std::pow(x, 6);
      xf[i] = x * f[i];
    }
    const auto d_xf = angular::dunkl_derivative_1d(xf, g, nu);
    const auto d_f = angular::dunkl_derivative_1d(f, g, nu);
    double worst = 0.0;
    for (int i = 0; i < g.size(); ++i) {
      const double comm = d_xf[i] - g.x()[i] * d_f[i];
      worst = std::max(worst, std::abs(comm - (f[i] + 2.0 * nu * f[g.mirror(i)])));
    }
    out.push_back(mandatory(suite, "deformed_heisenberg_algebra", worst, 1e-9));
  }
  return out;
}

std::vector<Check> radial_checks(const Options& opt, std::vector<RadialRow>* rows) {
  std::vector<Check> out;
  const std::string suite = "radial";
  const auto grid = radial::RadialGrid::for_oscillator(1e-3, 1.0, 1.0);
  double worst = 0.0;
  for (double k : {0.5, 2.0, 3.5, 6.0}) {
    const auto levels = radial::fd_eigensolve(k, 1.0, 1.0, grid, 4);
    for (int n = 0; n < 4; ++n) {
      const double exact = radial::oscillator_energy({n, k, 1.0, 1.0});
      const double err = std::abs(levels[n] - exact);
      worst = std::max(worst, err);
      if (rows) rows->push_back({k, n, exact, levels[n], err});
    }
  }
  out.push_back(mandatory(suite, "fd_eigensolver_vs_analytic", worst, 1e-3));

  const auto coarse = radial::RadialGrid::uniform(2.5e-3, 12.0);
  out.push_back(mandatory(suite, "ode_residual(n=0,K=2)",
                          radial::ode_residual({0, 2.0, 1.0, 1.0}, coarse, opt.energy_offset), 1e-6));
  out.push_back(mandatory(suite, "ode_residual(n=3,K=3.5)",
                          radial::ode_residual({3, 3.5, 1.0, 1.0}, coarse, opt.energy_offset), 1e-6));

  double norm_err = 0.0;
  for (double k : {0.5, 2.0, 3.5})
    for (int n = 0; n <= 3; ++n)
      for (int m = n; m <= 3; ++m) {
        const double ov = radial_overlap({n, k, 1.0, 1.0}, {m, k, 1.0, 1.0}, 12.0);
        norm_err = std::max(norm_err, std::abs(ov - (n == m ? 1.0 : 0.0)));
      }
  out.push_back(mandatory(suite, "orthonormality", norm_err, 1e-9));

  {
    // dE/dtheta = -omega m_s through K_+ = K_- - theta m_s
    const auto g2 = radial::RadialGrid::for_oscillator(2e-3, 1.0, 1.0);
    double slope_err = 0.0;
    for (Spin spin : kSpins) {
      const double ms = sign(spin);
      const double e0 = radial::fd_eigensolve(4.0 - 0.0 * ms, 1.0, 1.0, g2, 1)[0];
      const double e1 = radial::fd_eigensolve(4.0 - 1.0 * ms, 1.0, 1.0, g2, 1)[0];
      slope_err = std::max(slope_err, std::abs((e1 - e0) / 1.0 + ms));
    }
    out.push_back(mandatory(suite, "flux_shift_slope", slope_err, 1e-3));
  }
  return out;
}

std::vector<Check> thermo_checks(const Options& opt) {
  std::vector<Check> out;
  const std::string suite = "thermo";
  std::mt19937 rng(opt.seed + 1);
  std::uniform_real_distribution<double> u01(0.0, 1.0);

  {
    double worst = 0.0;
    int excluded = 0;
    double excluded_worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const double bw = 0.2 + 4.8 * u01(rng);
      const double theta = -3.0 + 6.0 * u01(rng);
      const Sector sector = i % 2 == 0 ? Sector::even : Sector::odd;
      const double nu = sector == Sector::even ? -0.45 + 0.9 * u01(rng) : -0.45 + 1.95 * u01(rng);
      const auto p = constrained_params(sector, nu, theta);
      const auto g = thermo::ground_energy(p, thermo::E0Mode::enumerated);
      const double z_closed = thermo::partition_closed({p, 1.0 / bw, thermo::E0Mode::enumerated});
      const double z_sum = thermo::partition_sum(p, bw, 80.0).value;
      const double rel = std::abs(z_closed - z_sum) / z_sum;
      if (g.spin_consistent) {
        worst = std::max(worst, rel);
      } else {
        ++excluded;
        excluded_worst = std::max(excluded_worst, rel);
      }
    }
    out.push_back(mandatory(suite, "closed_vs_spectral_sum", worst, 1e-9));
    out.push_back(info(suite, "closed_vs_spectral_sum_spin_split_draws", excluded_worst,
                       fmt::format("{} draws with spin-dependent lowest l (single-E0 form inapplicable)", excluded)));
  }
  {
    double worst_u = 0.0, worst_c = 0.0;
    for (int i = 0; i < 50; ++i) {
      const double bw = 0.2 + 4.8 * u01(rng);
      const double theta = -3.0 + 6.0 * u01(rng);
      const Sector sector = i % 2 == 0 ? Sector::even : Sector::odd;
      const auto p = constrained_params(sector, 0.3 * u01(rng), theta);
      const thermo::ThermoInput in{p, 1.0 / bw, thermo::E0Mode::enumerated};
      const auto cf = thermo::evaluate(in);
      const auto fd = thermo::finite_difference_point(in);
      worst_u = std::max(worst_u, std::abs(cf.U - fd.U) / std::abs(fd.U));
      worst_c = std::max(worst_c, std::abs(cf.C_V - fd.C_V) / std::abs(fd.C_V));
    }
    out.push_back(mandatory(suite, "U_vs_minus_dlnZ_dbeta", worst_u, 1e-6));
    out.push_back(mandatory(suite, "C_V_vs_dU_dT", worst_c, 1e-6));
  }
  {
    double worst_id = 0.0, worst_even = 0.0, worst_nu = 0.0;
    for (double t : {0.05, 0.3, 1.0, 4.0, 50.0})
      for (double theta : {0.4, 1.3, 2.7}) {
        const auto p = constrained_params(Sector::odd, 0.25, theta);
        const thermo::ThermoInput in{p, t, thermo::E0Mode::paper};
        const auto a = thermo::evaluate(in);
        const double beta = 1.0 / t;
        worst_id = std::max(worst_id, std::abs(a.S - beta * (a.U - a.F)) /
                                          std::max({1.0, std::abs(beta * a.U), std::abs(beta * a.F)}));
        const auto b = thermo::evaluate({constrained_params(Sector::odd, 0.25, -theta), t, thermo::E0Mode::paper});
        for (auto [x, y] : {std::pair{a.Z, b.Z}, {a.U, b.U}, {a.S, b.S}, {a.C_V, b.C_V}})
          worst_even = std::max(worst_even, std::abs(x - y) / std::max(1e-300, std::abs(x)));
        const auto c = thermo::evaluate({constrained_params(Sector::odd, 0.9, theta), t, thermo::E0Mode::paper});
        worst_nu = std::max({worst_nu, std::abs(a.S - c.S), std::abs(a.C_V - c.C_V)});
      }
    out.push_back(mandatory(suite, "S_equals_beta_U_minus_F", worst_id, 1e-12));
    out.push_back(mandatory(suite, "flux_evenness", worst_even, 1e-13));
    out.push_back(mandatory(suite, "nu_independence_S_CV", worst_nu, 1e-13));
  }
  {
    double worst_even_sector = 0.0;
    for (double theta : {-0.4, 0.0, 0.5, 1.0}) {
      const auto pe = constrained_params(Sector::even, 0.0, theta);
      worst_even_sector =
          std::max(worst_even_sector, std::abs(thermo::ground_energy(pe, thermo::E0Mode::paper).value -
                                               thermo::ground_energy(pe, thermo::E0Mode::enumerated).value));
      for (double nu : {0.0, 0.25, 0.5, 1.0}) {
        const auto po = constrained_params(Sector::odd, nu, theta);
        const double paper = thermo::ground_energy(po, thermo::E0Mode::paper).value;
        const double enumerated = thermo::ground_energy(po, thermo::E0Mode::enumerated).value;
        const std::string tag = fmt::format("(eps=-1,nu={},theta={})", nu, theta);
        out.push_back(info(suite, "E0_paper" + tag, paper));
        out.push_back(info(suite, "E0_enumerated" + tag, enumerated));
        out.push_back(info(suite, "E0_offset_paper_minus_enumerated" + tag, paper - enumerated));
      }
    }
    out.push_back(mandatory(suite, "E0_modes_agree_even_sector", worst_even_sector, 0.0));
  }
  {
    const double root = thermo::flux_peak_abscissa();
    double worst_x = 0.0, worst_lin = 0.0;
    for (double theta : {0.5, 1.0, 2.0}) {
      const auto pk = thermo::schottky_peak(constrained_params(Sector::even, 0.0, theta), 1e-3, 1e3);
      worst_x = std::max(worst_x, std::abs(pk.x_peak - root));
      worst_lin = std::max(worst_lin, std::abs(pk.t_peak / theta - 1.0 / root) * root);
    }
    out.push_back(mandatory(suite, "schottky_stationarity", worst_x, 1e-8));
    out.push_back(mandatory(suite, "schottky_linear_in_theta", worst_lin, 1e-8));
  }
  return out;
}

std::vector<Check> all_checks(const Options& opt) {
  std::vector<Check> out;
  for (auto&& part : {specfun_checks(opt), spectrum_checks(opt), angular_checks(opt), radial_checks(opt),
                      thermo_checks(opt)})
    out.insert(out.end(), part.begin(), part.end());
  return out;
}

bool passed(const std::vector<Check>& checks) {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::fail; });
}

void write_checks_csv(std::ostream& os, const std::vector<Check>& checks) {
  os << "suite,check,value,tolerance,status,detail\n";
  for (const auto& c : checks)
    os << c.suite << ',' << '"' << c.name << '"' << ',' << io::csv_double(c.value) << ',' << io::csv_double(c.tolerance)
       << ',' << to_string(c.status) << ',' << '"' << c.detail << '"' << '\n';
}

void write_angular_csv(std::ostream& os, const std::vector<AngularRow>& rows) {
  os << "l,sector,convention,eigenvalue_error,norm_error\n";
  for (const auto& r : rows)
    os << io::csv_index(AngularIndex::from_value(r.l)) << ',' << (r.sector > 0 ? "+1" : "-1") << ',' << r.convention
       << ',' << io::csv_double(r.eigen_error) << ',' << io::csv_double(r.norm_error) << '\n';
}

void write_radial_csv(std::ostream& os, const std::vector<RadialRow>& rows) {
  os << "K_plus,n,E_analytic,E_numeric,abs_error\n";
  for (const auto& r : rows)
    os << io::csv_double(r.k_plus) << ',' << r.n << ',' << io::csv_double(r.e_analytic) << ','
       << io::csv_double(r.e_numeric) << ',' << io::csv_double(r.abs_error) << '\n';
}

}  // namespace dunkl::verify
