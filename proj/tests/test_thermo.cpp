#include <doctest.h>

#include <cmath>
#include <random>

#include <boost/math/tools/roots.hpp>

#include "dunkl/thermo.hpp"

using namespace dunkl;
using namespace dunkl::thermo;

namespace {

ThermoInput at(Sector s, double nu, double theta, double t, E0Mode m = E0Mode::enumerated) {
  return {constrained_params(s, nu, theta), t, m};
}

// five-point central difference
template <class F>
double d5(F f, double x, double h) {
  return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

}  // namespace

TEST_CASE("closed form equals the spectral sum") {
  for (Sector s : {Sector::even, Sector::odd})
    for (double theta : {-0.4, 0.0, 0.5, 1.0, 2.3})
      for (double bw : {0.2, 0.9, 5.0}) {
        const double nu = s == Sector::even ? 0.2 : 0.75;
        const auto in = at(s, nu, theta, 1.0 / bw);
        const auto sum = partition_sum(in.params, bw, 80.0);
        CHECK(sum.l_tail_exact);
        CHECK(std::abs(partition_closed(in) - sum.value) / sum.value < 1e-9);
      }
}

TEST_CASE("internal energy is -d ln Z / d beta") {
  for (double theta : {-1.2, 0.0, 0.8})
    for (double t : {0.3, 1.0, 6.0}) {
      const auto in = at(Sector::odd, 0.4, theta, t);
      const double fd = -d5([&](double b) { return log_partition_closed({in.params, 1.0 / b, in.e0_mode}); }, 1.0 / t, 1e-3 / t);
      CHECK(internal_energy(in) == doctest::Approx(fd).epsilon(1e-9));
    }
}

TEST_CASE("entropy is -dF/dT and C_V is dU/dT") {
  for (double theta : {-0.4, 0.5, 1.0})
    for (double t : {0.2, 1.0, 8.0}) {
      const auto in = at(Sector::even, 0.0, theta, t, E0Mode::paper);
      const double s_fd = -d5([&](double tt) { return free_energy({in.params, tt, in.e0_mode}); }, t, 1e-3 * t);
      const double c_fd = d5([&](double tt) { return internal_energy({in.params, tt, in.e0_mode}); }, t, 1e-3 * t);
      CHECK(entropy(in) == doctest::Approx(s_fd).epsilon(1e-8));
      CHECK(heat_capacity(in) == doctest::Approx(c_fd).epsilon(1e-8));
    }
}

TEST_CASE("entropy, heat capacity and evenness") {
  for (double t : {0.05, 0.5, 3.0}) {
    const auto a = evaluate(at(Sector::even, 0.0, 0.7, t, E0Mode::paper));
    const auto b = evaluate(at(Sector::odd, 1.0, -0.7, t, E0Mode::paper));
    CHECK(a.S == doctest::Approx(b.S).epsilon(1e-14));
    CHECK(a.C_V == doctest::Approx(b.C_V).epsilon(1e-14));
    CHECK(a.S >= 0.0);
    CHECK(a.C_V >= 0.0);
  }
  // limits
  CHECK(heat_capacity(at(Sector::even, 0.0, 0.0, 1e3)) == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(entropy(at(Sector::even, 0.0, 1.0, 0.02)) < 1e-8);
  CHECK(entropy(at(Sector::even, 0.0, 0.0, 0.02)) == doctest::Approx(std::log(2.0)));
}

TEST_CASE("ground energy conventions") {
  for (double theta : {-0.4, 0.0, 0.5, 1.0}) {
    const auto p = constrained_params(Sector::even, 0.0, theta);
    CHECK(ground_energy(p, E0Mode::paper).value == ground_energy(p, E0Mode::enumerated).value);
    for (double nu : {0.0, 0.25, 0.5, 1.0}) {
      const auto q = constrained_params(Sector::odd, nu, theta);
      const auto e = ground_energy(q, E0Mode::enumerated);
      CHECK(e.spin_consistent);
      CHECK(e.value == doctest::Approx(2.0 + 2.0 * nu));
      CHECK(ground_energy(q, E0Mode::paper).value - e.value == doctest::Approx(1.0));
    }
  }
  const auto split = ground_energy(constrained_params(Sector::odd, 0.0, 2.5), E0Mode::enumerated);
  CHECK_FALSE(split.spin_consistent);
  CHECK(parse_e0_mode(to_string(E0Mode::paper)) == E0Mode::paper);
  CHECK_THROWS(parse_e0_mode("other"));
}

TEST_CASE("Schottky peak") {
  const auto root = boost::math::tools::bisect([](double x) { return x * std::tanh(x) - 1.0; }, 0.5, 2.0,
                                               boost::math::tools::eps_tolerance<double>(50));
  const double x = 0.5 * (root.first + root.second);
  CHECK(flux_peak_abscissa() == doctest::Approx(x).epsilon(1e-14));
  for (double theta : {0.5, 1.0, 2.0}) {
    const auto pk = schottky_peak(constrained_params(Sector::even, 0.0, theta), 1e-3, 1e3);
    CHECK(pk.has_flux_peak);
    CHECK(std::abs(pk.x_peak - x) < 1e-8);
    CHECK(pk.t_peak == doctest::Approx(theta / x).epsilon(1e-9));
  }
  CHECK_FALSE(schottky_peak(constrained_params(Sector::even, 0.0, 0.0), 1e-3, 1e3).has_flux_peak);
}

TEST_CASE("Richardson oracle points") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 20; ++i) {
    const auto in = at(i % 2 ? Sector::odd : Sector::even, 0.3 * u(rng), -3 + 6 * u(rng), 1.0 / (0.2 + 4.8 * u(rng)));
    const auto fd = finite_difference_point(in);
    const auto cf = evaluate(in);
    CHECK(fd.U == doctest::Approx(cf.U).epsilon(1e-7));
    CHECK(fd.C_V == doctest::Approx(cf.C_V).epsilon(1e-7));
  }
  const auto sp = spectral_sum_point(constrained_params(Sector::even, 0.0, 0.5), 1.0, 80.0);
  const auto cf = evaluate(at(Sector::even, 0.0, 0.5, 1.0));
  CHECK(sp.Z == doctest::Approx(cf.Z).epsilon(1e-9));
  CHECK(sp.U == doctest::Approx(cf.U).epsilon(1e-6));
}

TEST_CASE("limit report") {
  const auto rep = limit_report(constrained_params(Sector::even, 0.0, 1.0), E0Mode::paper);
  CHECK(rep.rows.size() == 21);
  CHECK(rep.high_t_monotone);
}

TEST_CASE("sweep is deterministic and row-major") {
  SweepAxes ax{log_grid(0.1, 10.0, 7), {-0.4, 0.5}, {0.0, 0.25, 1.0}, Sector::odd, E0Mode::paper, 1.0, 1.0};
  const auto a = sweep(ax);
  const auto b = sweep(ax);
  REQUIRE(a.cells.size() == 42);
  CHECK(a.cells[7].theta == 0.5);
  CHECK(a.cells[14].nu == 0.25);
  for (std::size_t i = 0; i < a.cells.size(); ++i) CHECK(a.cells[i].point.Z == b.cells[i].point.Z);
  const auto g = log_grid(0.1, 10.0, 7);
  CHECK(g.front() == 0.1);
  CHECK(g.back() == 10.0);
  ax.thetas = {};
  CHECK_THROWS(sweep(ax));
  ax.thetas = {0.0};
  ax.sector = Sector::even;  // nu = 1 is invalid there
  CHECK_THROWS(sweep(ax));
}
