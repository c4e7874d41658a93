#ifndef DUNKL_SPECFUN_HPP
#define DUNKL_SPECFUN_HPP

// Orthogonal polynomials, log-gamma and the angular normalization constants.
// Everything here is a pure function; domain violations throw std::domain_error.

namespace dunkl::specfun {

/// Parameters (a, b) of the Jacobi weight (1-x)^a (1+x)^b; both must exceed -1.
struct JacobiParams {
  double a = 0.0;
  double b = 0.0;
};

/// Generalized Laguerre polynomial L_n^alpha(x) by the three-term recurrence.
double laguerre(int n, double alpha, double x);

/// d/dx L_n^alpha(x) = -L_{n-1}^{alpha+1}(x).
double laguerre_derivative(int n, double alpha, double x);

/// Jacobi polynomial P_n^{(a,b)}(x). Valid for every real x, including
/// arguments outside [-1, 1].
double jacobi(int n, JacobiParams params, double x);

/// d/dx P_n^{(a,b)}(x) = (n + a + b + 1)/2 * P_{n-1}^{(a+1,b+1)}(x).
double jacobi_derivative(int n, JacobiParams params, double x);

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// Pair of constants multiplying the two reflection components of an
/// angular eigenfunction.
struct AngularNorms {
  double primary = 0.0;    // A_l or B_l
  double secondary = 0.0;  // A'_l or B'_l
};

/// Even-sector constants (A_l, A'_l) for integer l >= 1. Each constant gives
/// its component unit norm under |cos|^{2 nu1} |sin|^{2 nu2} on [0, 2pi).
AngularNorms angular_norm_even(int l, double nu1, double nu2);

/// Odd-sector constants (B_l, B'_l) for half-integer l >= 1/2, defined by unit
/// weighted norm of each component (cos(phi) P and sin(phi) P respectively).
AngularNorms angular_norm_odd(double l, double nu1, double nu2);

/// Odd-sector constants exactly as typeset in the source derivation, reading
/// the degree symbol n as l and "Gamma(n - 1/2)!" as (l - 1/2)!. Kept only for
/// side-by-side reporting; B'_l here is not a normalization constant.
AngularNorms angular_norm_odd_printed(double l, double nu1, double nu2);

}  // namespace dunkl::specfun

#endif  // DUNKL_SPECFUN_HPP
