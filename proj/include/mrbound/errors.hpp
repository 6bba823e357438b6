#pragma once

#include <stdexcept>
#include <string>

namespace mrbound {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain (r <= 0, x <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The potential has no relative minimum for 0 <= alpha <= 1 or A <= 0.
class NoMinimumError : public Error {
 public:
  using Error::Error;
};

/// Wei-Dong coefficients are undefined (log argument <= 0 or log == 0).
class SchemeUndefinedError : public Error {
 public:
  using Error::Error;
};

/// A bound-state quantity was requested for a level with epsilon <= 0.
class UnboundStateError : public Error {
 public:
  using Error::Error;
};

/// Terminating 2F1 series hit a non-positive integer lower parameter.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Invalid solver configuration (grid, bracket, matching point).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// The matching defect has no sign change inside the energy bracket.
class NoEigenvalueError : public Error {
 public:
  using Error::Error;
};

/// The energy bracket encloses the wrong number of nodes.
class BracketError : public Error {
 public:
  using Error::Error;
};

/// Unknown molecule name or unreadable registry file.
class LookupError : public Error {
 public:
  using Error::Error;
};

}  // namespace mrbound
