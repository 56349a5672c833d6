#pragma once

#include <stdexcept>
#include <string>

namespace hexalab {

/// Malformed input: unparseable text, wrong shapes, unknown names.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A well-formed request whose mathematical precondition does not hold
/// (e.g. a subset whose measure is not 1/2 handed to check_hex).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Enumeration refused because it would exceed the configured budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An identity that must hold by theorem failed. Indicates a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hexalab
