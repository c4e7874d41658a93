#include "dunkl/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

#include <fmt/format.h>

#include "dunkl/errors.hpp"

namespace dunkl {
namespace {

constexpr double kConstraintTol = 1e-12;

double reflection_mix(const ModelParams& p) { return p.nu1 + sign(p.sector) * p.nu2; }

void require_constraint(const ModelParams& p) {
  if (auto c = check_constraint(p); !c) throw constraint_error(c.diagnostic);
}

void require_domain(Sector sector, AngularIndex l) {
  if (!in_sector_domain(sector, l))
    throw std::domain_error(fmt::format("l = {} is outside the {} sector domain", l.value(),
                                        sector == Sector::even ? "even" : "odd"));
}

}  // namespace

void validate(const ModelParams& p) {
  if (!std::isfinite(p.nu1) || !std::isfinite(p.nu2) || !std::isfinite(p.theta) || !std::isfinite(p.mass) ||
      !std::isfinite(p.omega))
    throw std::invalid_argument("model parameters must be finite");
  if (!(p.nu1 > -0.5) || !(p.nu2 > -0.5))
    throw std::invalid_argument(fmt::format("Dunkl parameters must exceed -1/2 (nu1 = {}, nu2 = {})", p.nu1, p.nu2));
  if (!(p.mass > 0.0)) throw std::invalid_argument("mass must be positive");
  if (!(p.omega > 0.0)) throw std::invalid_argument("omega must be positive");
}

ModelParams constrained_params(Sector sector, double nu, double theta, double mass, double omega) {
  ModelParams p;
  p.sector = sector;
  p.nu1 = nu;
  p.nu2 = sector == Sector::even ? -nu : nu;
  // -0.0 would leak into serialized output
  if (p.nu2 == 0.0) p.nu2 = 0.0;
  p.theta = theta;
  p.mass = mass;
  p.omega = omega;
  return p;
}

double sector_nu(const ModelParams& p) { return 0.5 * (p.nu1 + p.nu2); }

AngularIndex AngularIndex::from_value(double l) {
  const double twice = 2.0 * l;
  const double rounded = std::round(twice);
  if (!std::isfinite(l) || std::abs(twice - rounded) > 1e-9)
    throw std::domain_error(fmt::format("angular index {} is not a multiple of 1/2", l));
  return AngularIndex(static_cast<int>(rounded));
}

AngularIndex first_index(Sector sector) {
  return AngularIndex::from_twice(sector == Sector::even ? 2 : 1);
}

bool in_sector_domain(Sector sector, AngularIndex l) {
  if (sector == Sector::even) return l.is_integer() && l.twice() >= 2;
  return !l.is_integer() && l.twice() >= 1;
}

ConstraintCheck check_constraint(const ModelParams& p) {
  if (p.theta == 0.0) return {};
  const double mix = reflection_mix(p);
  if (std::abs(mix) <= kConstraintTol) return {};
  const char* relation = p.sector == Sector::even ? "nu1 = -nu2" : "nu1 = nu2";
  return {false, fmt::format("flux/reflection compatibility condition nu1 + epsilon*nu2 = 0 violated: "
                             "theta = {} requires {} in the {} sector, but nu1 + epsilon*nu2 = {}",
                             p.theta, relation, p.sector == Sector::even ? "even" : "odd", mix)};
}

double lambda_eps(const ModelParams& p, AngularIndex l, Branch branch) {
  require_domain(p.sector, l);
  const double lv = l.value();
  const double radicand = p.sector == Sector::even ? lv * (lv + p.nu1 + p.nu2) : (lv + p.nu1) * (lv + p.nu2);
  if (radicand < 0.0) throw std::domain_error("negative radicand in angular eigenvalue");
  return sign(branch) * 2.0 * std::sqrt(radicand);
}

EffectiveKGeneral effective_k_general(const ModelParams& p, double lambda, Spin spin) {
  const double mix = reflection_mix(p);
  const double shifted = p.theta - lambda;
  return {std::sqrt(lambda * lambda + mix * mix),
          shifted * shifted + mix * mix + 2.0 * p.theta * mix * sign(spin)};
}

EffectiveK effective_k_final(const ModelParams& p, AngularIndex l, Spin spin, Branch branch) {
  require_constraint(p);
  const double lambda = lambda_eps(p, l, branch);
  const double mix = reflection_mix(p);
  const double magnitude = std::hypot(lambda, mix);
  const double k_minus = lambda * sign(spin) > 0.0 ? magnitude : -magnitude;
  return {k_minus, k_minus - p.theta * sign(spin)};
}

bool is_admissible(const ModelParams& p, const QuantumState& s) {
  if (s.n < 0 || !in_sector_domain(p.sector, s.l)) return false;
  return effective_k_final(p, s.l, s.spin, s.branch).k_plus > -1.0;
}

double energy(const ModelParams& p, const QuantumState& s) {
  if (!is_admissible(p, s))
    throw inadmissible_state_error(
        fmt::format("state (n={}, l={}, m_s={}) is not admissible: K_+ <= -1 or index out of domain", s.n,
                    s.l.value(), sign(s.spin)));
  const auto k = effective_k_final(p, s.l, s.spin, s.branch);
  return p.omega * (2.0 * s.n + k.k_plus + 1.0);
}

LowestL lowest_l(const ModelParams& p, Spin spin) {
  require_constraint(p);
  const double ms = sign(spin);
  LowestL out;
  if (p.sector == Sector::even) {
    const int c = static_cast<int>(std::ceil((p.theta * ms - 1.0) / 2.0));
    out.ceiling_rule = AngularIndex::from_twice(2 * std::max(1, c));
    out.aggregated_l0 =
        std::abs(p.theta) <= 3.0 ? 1 : static_cast<int>(std::ceil((std::abs(p.theta) - 1.0) / 2.0));
  } else {
    const double nu = sector_nu(p);
    const int c = static_cast<int>(std::ceil((p.theta * ms - 2.0 * nu - 1.0) / 2.0));
    out.ceiling_rule = AngularIndex::from_twice(std::max(1, 2 * c + 1));
    out.aggregated_l0 = std::abs(p.theta) <= 2.0 * (1.0 + nu)
                            ? 0
                            : static_cast<int>(std::ceil((std::abs(p.theta) - 2.0 * nu - 1.0) / 2.0));
  }
  AngularIndex l = first_index(p.sector);
  while (effective_k_final(p, l, spin, positive_branch(spin)).k_plus <= -1.0) l = l.next();
  out.admissible = l;
  return out;
}

std::vector<SpectrumLevel> SpectrumTable::levels(double tol) const {
  std::vector<SpectrumLevel> out;
  for (const auto& e : states) {
    if (!out.empty() && std::abs(e.energy - out.back().energy) <= tol * std::max(1.0, std::abs(e.energy)))
      ++out.back().degeneracy;
    else
      out.push_back({e.energy, 1});
  }
  return out;
}

int enumeration_l_max(const ModelParams& p, double cutoff) {
  const double bound = std::ceil(cutoff / (2.0 * p.omega)) + std::ceil(std::abs(p.theta)) + 2.0;
  return std::max(1, static_cast<int>(bound));
}

SpectrumTable enumerate(const ModelParams& p, double cutoff, DegeneracyPolicy policy) {
  validate(p);
  require_constraint(p);
  SpectrumTable table;
  table.cutoff = cutoff;
  table.policy = policy;

  const int l_max = enumeration_l_max(p, cutoff);
  for (Spin spin : kSpins) {
    for (Branch branch : {Branch::plus, Branch::minus}) {
      if (policy == DegeneracyPolicy::positive_branch && branch != positive_branch(spin)) continue;
      for (AngularIndex l = first_index(p.sector); l.value() <= l_max; l = l.next()) {
        const auto k = effective_k_final(p, l, spin, branch);
        if (k.k_plus <= -1.0) continue;
        for (int n = 0;; ++n) {
          const double e = p.omega * (2.0 * n + k.k_plus + 1.0);
          if (e > cutoff) break;
          table.states.push_back({{n, l, spin, branch}, k.k_minus, k.k_plus, e});
        }
      }
    }
  }
  if (table.states.empty())
    throw empty_spectrum_error(fmt::format("no admissible state with energy <= {}", cutoff));

  auto key = [](const SpectrumEntry& e) {
    return std::make_tuple(e.energy, e.state.n, e.state.l, -sign(e.state.spin), -sign(e.state.branch));
  };
  std::sort(table.states.begin(), table.states.end(),
            [&](const SpectrumEntry& a, const SpectrumEntry& b) { return key(a) < key(b); });
  return table;
}

SpectrumEntry ground_state(const ModelParams& p, Spin spin) {
  const AngularIndex l = lowest_l(p, spin).admissible;
  const Branch branch = positive_branch(spin);
  const auto k = effective_k_final(p, l, spin, branch);
  return {{0, l, spin, branch}, k.k_minus, k.k_plus, p.omega * (k.k_plus + 1.0)};
}

}  // namespace dunkl
