#ifndef DUNKL_ERRORS_HPP
#define DUNKL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dunkl {

/// Parameter set violates the flux/reflection compatibility condition
/// nu1 + epsilon * nu2 = 0 required whenever theta != 0.
class constraint_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested state has K_plus <= -1 (radial solution not normalizable).
class inadmissible_state_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class empty_spectrum_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Truncated spectral sum cannot certify its tail at the requested cutoff.
class cutoff_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class convergence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dunkl

#endif  // DUNKL_ERRORS_HPP
