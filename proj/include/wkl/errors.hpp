#pragma once

#include <stdexcept>
#include <string>

namespace wkl {

/// Input that is well formed but outside the mathematical domain of an
/// operation (critical level, non-antidominant weight, bad Cartan type...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A bounded search (Bruhat ball, orbit ball, truncated module) was too small
/// for the requested computation.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed configuration or textual input.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace wkl
