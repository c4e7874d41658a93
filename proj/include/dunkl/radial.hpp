#ifndef DUNKL_RADIAL_HPP
#define DUNKL_RADIAL_HPP

// Radial oscillator eigenfunctions in the outer (physical) region, the
// residual of the radial equation, and a finite-difference eigensolver that
// serves as an independent check of E = omega (2n + K_+ + 1).

#include <vector>

namespace dunkl::radial {

struct RadialState {
  int n = 0;
  double k_plus = 0.5;
  double mass = 1.0;
  double omega = 1.0;
};

/// Interior nodes r_i = i h, i = 1..N-1, of [0, r_max] with r_max = N h.
/// Dirichlet conditions apply at both ends.
struct RadialGrid {
  std::vector<double> r;
  double h = 0.0;
  double r_max = 0.0;

  static RadialGrid uniform(double h, double r_max);
  /// r_max = 12 / sqrt(M omega).
  static RadialGrid for_oscillator(double h, double mass, double omega);
};

/// ln N_{n,l} with N^2 = 2 n! / Gamma(n + K_+ + 1).
double log_normalization(int n, double k_plus);

/// N (M omega)^{(K+1)/2} r^{K+1/2} e^{-M omega r^2 / 2} L_n^K(M omega r^2),
/// unit norm in L^2(dr) for every M omega.
double radial_eigenfunction(const RadialState& s, double r);

/// omega (2n + K + 1)
double oscillator_energy(const RadialState& s);

/// max |L'' - (K^2 - 1/4)/r^2 L - M^2 omega^2 r^2 L + 2 M E L| / (M omega max|L|)
/// over grid nodes with r >= 64h, using an 8th-order central difference.
/// energy_offset is added to E (fault injection for self-tests).
double ode_residual(const RadialState& s, const RadialGrid& grid, double energy_offset = 0.0);

/// Lowest k_levels eigenvalues of -d^2/dr^2 + (K^2 - 1/4)/r^2 + M^2 omega^2 r^2,
/// divided by 2M. Symmetric tridiagonal discretization, Sturm-sequence
/// bisection. With Dirichlet at r = 0 the oracle resolves the |K| branch, so
/// comparisons against omega(2n + K + 1) are meaningful for K >= 1/2 only.
std::vector<double> fd_eigensolve(double k_plus, double mass, double omega, const RadialGrid& grid, int k_levels);

/// Number of eigenvalues of the tridiagonal matrix (diag, off) below x.
int sturm_count(const std::vector<double>& diag, const std::vector<double>& off, double x);

/// Inner-region solution r^{K_-+1/2} e^{-M omega r^2/2} L_n^{K_-}(M omega r^2),
/// scaled by amplitude.
double inner_solution(int n, double k_minus, double mass, double omega, double amplitude, double r);

/// Outer amplitude fixed by continuity at the flux-tube radius to leading
/// order in R: N_+ = N_- R^{K_- - K_+}.
double matched_outer_amplitude(double inner_amplitude, double k_minus, double k_plus, double tube_radius);

}  // namespace dunkl::radial

#endif  // DUNKL_RADIAL_HPP
