#pragma once

#include <stdexcept>
#include <string>

namespace vsft {

/// A documented precondition of an operation does not hold. The message
/// names the first violated clause.
class PreconditionViolated : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sum of a composition differs from the declared total.
class CompositionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A search or enumeration hit its configured cap. Callers turn this into an
/// Inconclusive verdict; it never stands for a negative answer.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::string which, const std::string& what)
      : std::runtime_error(what), which_(std::move(which)) {}
  const std::string& which() const noexcept { return which_; }

 private:
  std::string which_;
};

/// Requested operation is not defined for this ring model.
class UnsupportedModel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Model or claim input failed schema validation.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vsft
