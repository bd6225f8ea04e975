#pragma once

#include <stdexcept>
#include <string>

namespace mhp {

/// Operands live in different polynomial rings, or data violates a type invariant.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
  using std::domain_error::domain_error;
};

/// Invalid user-facing input (bad partition text, inconsistent puncture data).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace mhp
