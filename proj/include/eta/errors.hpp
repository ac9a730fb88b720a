#pragma once

#include <stdexcept>
#include <string>

namespace eta {

// Bad arguments or violated preconditions.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Request exceeds a dense-storage or enumeration budget.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace eta
