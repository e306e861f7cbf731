#pragma once

#include <stdexcept>
#include <string>

namespace coxkl {

// Caller violated a documented precondition (bad basis, bad group spec,
// incomparable pair where u <= w is required, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal consistency check failed; indicates a bug or a corrupt cache.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A property that holds for every crystallographic group turned out false.
class TheoremViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace coxkl
