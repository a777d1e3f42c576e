#pragma once

#include <stdexcept>
#include <string>

namespace mnrule {

// Input violates an operation's precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is well formed but outside what the library defines (e.g. p_0).
class UnsupportedArgument : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An enumeration would exceed its configured cap.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mnrule
