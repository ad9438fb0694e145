#ifndef DSRC_ERRORS_HPP
#define DSRC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dsrc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A state with rho <= 0, p <= 0 or gamma <= 1 was requested.
class InvalidState : public Error {
 public:
  using Error::Error;
};

/// A stationary wave curve has no admissible solution for the given state.
class NotSolvable : public Error {
 public:
  using Error::Error;
};

/// The classical pressure equation has no positive root.
class VacuumFormation : public Error {
 public:
  using Error::Error;
};

/// A bracketing root search could not find a sign change.
class RootNotBracketed : public Error {
 public:
  using Error::Error;
};

/// The uncorrected K-T flux cannot be evaluated for the current traces.
class Unavailable : public Error {
 public:
  using Error::Error;
};

/// Bad run configuration (grid alignment, test id, flags).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace dsrc

#endif  // DSRC_ERRORS_HPP
