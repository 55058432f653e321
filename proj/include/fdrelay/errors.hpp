#pragma once

#include <stdexcept>
#include <string>

namespace fdrelay {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid configuration value or malformed config file.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// The surrogate objective needs zeta_hat > 0; zeta_hat == 0 goes to the
/// ideal-cancellation solver.
class ZetaHatZero : public Error {
 public:
  ZetaHatZero() : Error("zeta_hat is zero: use the ideal-cancellation path") {}
};

class Infeasible : public Error {
 public:
  using Error::Error;
};

class EmptyInterval : public Error {
 public:
  using Error::Error;
};

/// A closed form was evaluated outside the open quadrant where it is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace fdrelay
