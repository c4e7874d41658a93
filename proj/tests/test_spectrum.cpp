#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "dunkl/errors.hpp"
#include "dunkl/spectrum.hpp"

using namespace dunkl;

namespace {

std::vector<double> energies(const SpectrumTable& t) {
  std::vector<double> e;
  for (const auto& s : t.states) e.push_back(s.energy);
  return e;
}

QuantumState state(int n, double l, Spin s, Branch b) { return {n, AngularIndex::from_value(l), s, b}; }

}  // namespace

TEST_CASE("constraint check") {
  CHECK(check_constraint(constrained_params(Sector::even, 0.3, 1.0)));
  CHECK(check_constraint(constrained_params(Sector::odd, 0.3, -2.0)));
  ModelParams p;
  p.nu1 = 0.4;
  p.nu2 = 0.4;
  CHECK(check_constraint(p));  // theta = 0: any nu allowed
  p.theta = 1.0;
  const auto c = check_constraint(p);
  CHECK_FALSE(c);
  CHECK(c.diagnostic.find("nu1 + epsilon*nu2 = 0") != std::string::npos);
  p.nu2 = -0.4 + 5e-13;
  CHECK(check_constraint(p));
  p.nu2 = -0.4 + 5e-12;
  CHECK_FALSE(check_constraint(p));
}

TEST_CASE("angular eigenvalues") {
  const auto even = constrained_params(Sector::even, 0.3, 0.0);
  CHECK(lambda_eps(even, AngularIndex::from_value(2), Branch::plus) == doctest::Approx(4.0));
  CHECK(lambda_eps(even, AngularIndex::from_value(2), Branch::minus) == doctest::Approx(-4.0));
  const auto odd = constrained_params(Sector::odd, 0.25, 0.0);
  CHECK(lambda_eps(odd, AngularIndex::from_value(1.5), Branch::plus) == doctest::Approx(2.0 * 1.75));
  ModelParams g;
  g.nu1 = 0.1;
  g.nu2 = 0.6;
  g.sector = Sector::odd;
  CHECK(lambda_eps(g, AngularIndex::from_value(0.5), Branch::plus) == doctest::Approx(2.0 * std::sqrt(0.6 * 1.1)));
  CHECK_THROWS(lambda_eps(even, AngularIndex::from_value(1.5), Branch::plus));
}

TEST_CASE("effective momenta on the constraint surface") {
  for (Sector s : {Sector::even, Sector::odd})
    for (double theta : {-1.7, 0.4, 2.2}) {
      const auto p = constrained_params(s, 0.35, theta);
      for (AngularIndex l = first_index(s); l.value() < 5; l = l.next())
        for (Spin spin : kSpins)
          for (Branch b : {Branch::plus, Branch::minus}) {
            const double lam = lambda_eps(p, l, b);
            const auto k = effective_k_final(p, l, spin, b);
            CHECK(k.k_minus == doctest::Approx(lam / sign(spin)));
            CHECK(k.k_plus == doctest::Approx(k.k_minus - theta * sign(spin)));
            const auto g = effective_k_general(p, lam, spin);
            CHECK(g.k_plus_sq == doctest::Approx(k.k_plus * k.k_plus));
          }
    }
}

TEST_CASE("unconstrained theta = 0 gives the Dunkl oscillator ladder") {
  ModelParams p;
  p.nu1 = 0.2;
  p.nu2 = 0.45;
  for (Sector s : {Sector::even, Sector::odd}) {
    p.sector = s;
    for (AngularIndex l = first_index(s); l.value() < 6; l = l.next()) {
      const auto k = effective_k_final(p, l, Spin::up, Branch::plus);
      CHECK(k.k_plus == doctest::Approx(2 * l.value() + p.nu1 + p.nu2));
    }
  }
  p.theta = 0.5;
  CHECK_THROWS_AS(effective_k_final(p, AngularIndex::from_value(0.5), Spin::up, Branch::plus), constraint_error);
}

TEST_CASE("energy and admissibility") {
  const auto p = constrained_params(Sector::even, 0.0, 0.5);
  CHECK(energy(p, state(0, 1, Spin::up, Branch::plus)) == doctest::Approx(2.5));
  CHECK(energy(p, state(2, 1, Spin::down, Branch::minus)) == doctest::Approx(7.5));
  // K_+ = -1 exactly is excluded
  const auto edge = constrained_params(Sector::even, 0.0, 3.0);
  CHECK_FALSE(is_admissible(edge, state(0, 1, Spin::up, Branch::plus)));
  CHECK(is_admissible(edge, state(0, 2, Spin::up, Branch::plus)));
  CHECK_THROWS_AS(energy(edge, state(0, 1, Spin::up, Branch::plus)), inadmissible_state_error);
  CHECK_FALSE(is_admissible(p, {-1, AngularIndex::from_value(1), Spin::up, Branch::plus}));
}

TEST_CASE("lowest admissible l") {
  const auto a = lowest_l(constrained_params(Sector::even, 0.0, 5.0), Spin::up);
  CHECK(a.ceiling_rule.value() == 2.0);
  CHECK(a.admissible.value() == 3.0);  // K_+ = 2l - 5 > -1
  const auto b = lowest_l(constrained_params(Sector::even, 0.0, 4.5), Spin::up);
  CHECK(b.ceiling_rule.value() == b.admissible.value());
  const auto c = lowest_l(constrained_params(Sector::odd, 0.25, 1.0), Spin::up);
  CHECK(c.admissible.value() == 0.5);
  CHECK(c.aggregated_l0 == 0);
}

TEST_CASE("standard oscillator reduction is exact") {
  const double cutoff = 25.0;
  const auto table = enumerate(ModelParams{}, cutoff);
  std::vector<double> expect;
  for (int n = 0; 2 * n + 3 <= cutoff; ++n)
    for (int l = 1; 2 * n + 2 * l + 1 <= cutoff; ++l)
      for (int spin = 0; spin < 2; ++spin) expect.push_back(2 * n + 2 * l + 1);
  std::sort(expect.begin(), expect.end());
  CHECK(energies(table) == expect);
}

TEST_CASE("enumeration matches brute force at theta = 0.5") {
  const double theta = 0.5, cutoff = 20.0;
  const auto table = enumerate(constrained_params(Sector::even, 0.0, theta), cutoff);
  std::vector<double> expect;
  for (int n = 0; n < 20; ++n)
    for (int l = 1; l < 20; ++l)
      for (int ms : {1, -1}) {
        const double kp = 2.0 * l - theta * ms;
        const double e = 2 * n + kp + 1;
        if (kp > -1 && e <= cutoff) expect.push_back(e);
      }
  std::sort(expect.begin(), expect.end());
  const auto got = energies(table);
  REQUIRE(got.size() == expect.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == doctest::Approx(expect[i]).epsilon(1e-14));
}

TEST_CASE("odd-sector brute force") {
  const double nu = 0.25, theta = -0.4, cutoff = 15.0;
  const auto table = enumerate(constrained_params(Sector::odd, nu, theta), cutoff);
  std::vector<double> expect;
  for (int n = 0; n < 20; ++n)
    for (int k = 0; k < 20; ++k)
      for (int ms : {1, -1}) {
        const double l = k + 0.5;
        const double kp = 2.0 * (l + nu) - theta * ms;
        const double e = 2 * n + kp + 1;
        if (kp > -1 && e <= cutoff) expect.push_back(e);
      }
  std::sort(expect.begin(), expect.end());
  const auto got = energies(table);
  REQUIRE(got.size() == expect.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == doctest::Approx(expect[i]).epsilon(1e-14));
}

TEST_CASE("spectrum is even in the flux") {
  for (Sector s : {Sector::even, Sector::odd}) {
    const auto a = energies(enumerate(constrained_params(s, 0.3, 1.3), 18.0));
    const auto b = energies(enumerate(constrained_params(s, 0.3, -1.3), 18.0));
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == doctest::Approx(b[i]));
  }
}

TEST_CASE("degeneracy policies and ordering") {
  const auto p = constrained_params(Sector::even, 0.1, 2.7);
  const auto one = enumerate(p, 16.0);
  const auto both = enumerate(p, 16.0, DegeneracyPolicy::both_branches);
  CHECK(both.states.size() > one.states.size());
  for (const auto& e : one.states) CHECK(e.state.branch == positive_branch(e.state.spin));
  CHECK(std::is_sorted(one.states.begin(), one.states.end(),
                       [](const auto& x, const auto& y) { return x.energy < y.energy; }));
  int total = 0;
  for (const auto& lv : one.levels()) total += lv.degeneracy;
  CHECK(total == static_cast<int>(one.states.size()));
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(enumerate(ModelParams{}, 2.5), empty_spectrum_error);
  CHECK_THROWS(AngularIndex::from_value(0.3));
  ModelParams bad;
  bad.nu1 = -0.5;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  const auto g = ground_state(constrained_params(Sector::even, 0.0, 0.5), Spin::up);
  CHECK(g.energy == doctest::Approx(2.5));
}
