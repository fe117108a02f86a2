#pragma once

#include <stdexcept>
#include <string>

namespace extopt {

// Malformed or out-of-range arguments.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// w >= n*x: the infimum is attained trivially and no instance is built.
class TrivialRegimeError : public InputError {
 public:
  using InputError::InputError;
};

// Queue parameters with rho >= 1.
class StabilityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A requested structured solution does not exist, or a construction
// broke one of its own invariants.
class ConstructionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An exhaustive routine would exceed its configured cap.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Solver called outside the parameter regime it handles.
class WrongBranchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace extopt
