#pragma once

#include <stdexcept>
#include <string>

namespace gkn {

/// Base for every error raised by the library. The CLI maps each subclass
/// onto a fixed exit code (see README).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad parameters: capacity exceeded, k or N out of range, missing flags.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Operation called outside its precondition (vertex not in tuple, T not a
/// subset of f, degenerate point set, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input (coloring, edge list, report, certificate, points).
class FormatError : public Error {
 public:
  using Error::Error;
};

/// A check that holds for every input failed, so the code computing it is
/// wrong. Never a refutation of a claim.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace gkn
