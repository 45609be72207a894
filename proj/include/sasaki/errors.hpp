#pragma once

#include <stdexcept>
#include <string>

namespace sasaki {

/// Bad user input: parameters outside a precondition. The CLI maps this to
/// exit code 1.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A structural fact that must hold for every valid input did not. The CLI
/// maps this to exit code 2.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sasaki
