#pragma once

#include <stdexcept>

namespace trop {

// Precondition violated or operation undefined on the given values.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Input exceeds a configured search limit (oracle degree cap, u-schedule).
struct CapacityError : std::length_error {
  using std::length_error::length_error;
};

// Malformed text or JSON input.
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace trop
