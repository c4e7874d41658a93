#ifndef DUNKL_SPECTRUM_HPP
#define DUNKL_SPECTRUM_HPP

// Exact spectrum of the Dunkl-Pauli oscillator threaded by an Aharonov-Bohm
// flux: selection rules, effective angular momenta and state enumeration.
//
// Units: hbar = c = k_B = 1. Energies are absolute (they carry omega).

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace dunkl {

enum class Sector : int { even = +1, odd = -1 };
enum class Spin : int { up = +1, down = -1 };
enum class Branch : int { plus = +1, minus = -1 };

constexpr int sign(Sector s) { return static_cast<int>(s); }
constexpr int sign(Spin s) { return static_cast<int>(s); }
constexpr int sign(Branch b) { return static_cast<int>(b); }

inline constexpr Spin kSpins[] = {Spin::up, Spin::down};

struct ModelParams {
  double nu1 = 0.0;
  double nu2 = 0.0;
  Sector sector = Sector::even;
  double theta = 0.0;  // AB flux, dimensionless
  double mass = 1.0;
  double omega = 1.0;

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

/// Throws std::invalid_argument unless nu_j > -1/2, mass > 0, omega > 0 and
/// all fields are finite. Does not check the flux constraint.
void validate(const ModelParams& p);

/// Parameters on the constraint surface for the given sector: (nu, -nu) for
/// the even sector and (nu, nu) for the odd sector.
ModelParams constrained_params(Sector sector, double nu, double theta, double mass = 1.0, double omega = 1.0);

/// The single deformation parameter of the odd sector, (nu1 + nu2) / 2.
double sector_nu(const ModelParams& p);

/// Angular quantum number l, stored as 2l so that half-integers are exact.
class AngularIndex {
 public:
  constexpr AngularIndex() = default;
  static constexpr AngularIndex from_twice(int twice_l) { return AngularIndex(twice_l); }
  /// Rounds to the nearest half-integer; throws if |2l - round(2l)| > 1e-9.
  static AngularIndex from_value(double l);

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return 0.5 * twice_; }
  constexpr AngularIndex next() const { return AngularIndex(twice_ + 2); }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  friend constexpr auto operator<=>(AngularIndex, AngularIndex) = default;

 private:
  constexpr explicit AngularIndex(int twice_l) : twice_(twice_l) {}
  int twice_ = 2;
};

/// l = 1 for the even sector, l = 1/2 for the odd sector.
AngularIndex first_index(Sector sector);

/// True when l lies in the sector's domain (integer >= 1 or half-integer >= 1/2).
bool in_sector_domain(Sector sector, AngularIndex l);

struct QuantumState {
  int n = 0;
  AngularIndex l;
  Spin spin = Spin::up;
  Branch branch = Branch::plus;

  friend bool operator==(const QuantumState&, const QuantumState&) = default;
};

struct ConstraintCheck {
  bool satisfied = true;
  std::string diagnostic;
  explicit operator bool() const { return satisfied; }
};

/// True iff theta == 0 or |nu1 + epsilon nu2| <= 1e-12.
ConstraintCheck check_constraint(const ModelParams& p);

/// Angular eigenvalue lambda_epsilon: +-2 sqrt(l (l + nu1 + nu2)) in the even
/// sector, +-2 sqrt((l + nu1)(l + nu2)) in the odd sector.
double lambda_eps(const ModelParams& p, AngularIndex l, Branch branch);

struct EffectiveKGeneral {
  double k_minus = 0.0;     // +sqrt(K_-^2)
  double k_plus_sq = 0.0;   // K_+^2, sign unresolved
};

/// K_-^2 = lambda^2 + s^2 and K_+^2 = (theta - lambda)^2 + s^2 + 2 theta s m_s
/// with s = nu1 + epsilon nu2 (epsilon_1 = +1 representative).
EffectiveKGeneral effective_k_general(const ModelParams& p, double lambda, Spin spin);

struct EffectiveK {
  double k_minus = 0.0;
  double k_plus = 0.0;
};

/// K_- = sgn(lambda / m_s) sqrt(lambda^2 + s^2) (= lambda / m_s on the constraint
/// surface) and K_+ = K_- - theta m_s. Throws constraint_error off the surface.
EffectiveK effective_k_final(const ModelParams& p, AngularIndex l, Spin spin, Branch branch);

/// The state is admissible when n >= 0, l is in the sector domain and K_+ > -1.
bool is_admissible(const ModelParams& p, const QuantumState& s);

/// E = omega (2n + K_+ + 1). Throws inadmissible_state_error / constraint_error.
double energy(const ModelParams& p, const QuantumState& s);

/// The lambda branch with lambda / m_s > 0.
constexpr Branch positive_branch(Spin spin) { return spin == Spin::up ? Branch::plus : Branch::minus; }

struct LowestL {
  /// Ceiling rule max(1, ceil((theta m_s - 1)/2)) (even) or
  /// max(1/2, ceil((theta m_s - 2 nu - 1)/2) + 1/2) (odd).
  AngularIndex ceiling_rule;
  /// Aggregated l0: 1 / 0 below the |theta| threshold, ceiling formula above it
  /// (evaluated with m_s = sgn(theta)).
  int aggregated_l0 = 0;
  /// Smallest l with K_+ > -1 on the positive branch (strict inequality).
  AngularIndex admissible;
};

LowestL lowest_l(const ModelParams& p, Spin spin);

enum class DegeneracyPolicy {
  positive_branch,  // one branch per (n, l, m_s): lambda / m_s > 0
  both_branches,    // strict mode: every admissible branch
};

struct SpectrumEntry {
  QuantumState state;
  double k_minus = 0.0;
  double k_plus = 0.0;
  double energy = 0.0;
};

struct SpectrumLevel {
  double energy = 0.0;
  int degeneracy = 0;
};

struct SpectrumTable {
  std::vector<SpectrumEntry> states;  // ascending energy
  double cutoff = 0.0;
  DegeneracyPolicy policy = DegeneracyPolicy::positive_branch;

  /// Distinct energies (merged within tol * omega-scale) with multiplicities.
  std::vector<SpectrumLevel> levels(double tol = 1e-9) const;
};

/// All admissible states with E <= cutoff. Throws empty_spectrum_error when
/// none qualify.
SpectrumTable enumerate(const ModelParams& p, double cutoff,
                        DegeneracyPolicy policy = DegeneracyPolicy::positive_branch);

/// Upper bound on l for enumeration: ceil(cutoff / (2 omega)) + |theta| + 2.
int enumeration_l_max(const ModelParams& p, double cutoff);

/// Lowest admissible energy for a fixed spin under the positive-branch policy.
SpectrumEntry ground_state(const ModelParams& p, Spin spin);

}  // namespace dunkl

#endif  // DUNKL_SPECTRUM_HPP
