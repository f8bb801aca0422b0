#pragma once

#include <stdexcept>

namespace primroot {

// Input outside the mathematical domain of an operation.  CLI exit code 2.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input exceeds a supported size or a configured resource budget.  CLI exit code 3.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace primroot
