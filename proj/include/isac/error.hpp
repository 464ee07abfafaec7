#pragma once

#include <stdexcept>

namespace isac {

// Invalid or infeasible experiment parameters (sizes, G, flags).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside an operation's mathematical domain (m = 0, empty set, t < 1).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace isac
