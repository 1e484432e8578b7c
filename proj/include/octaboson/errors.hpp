#pragma once

#include <stdexcept>
#include <string>

namespace octaboson {

/// Argument shapes that do not fit together (length/nvars mismatch, wrong profile).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation is violated (e.g. removing an absent part).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A parameter-dependent denominator vanishes, or a parameter leaves the admissible domain.
class GenericityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact division left a nonzero remainder.  The remainder is kept in printable form.
class NotDivisibleError : public std::runtime_error {
 public:
  NotDivisibleError(const std::string& what, std::string remainder)
      : std::runtime_error(what), remainder_(std::move(remainder)) {}

  const std::string& remainder() const noexcept { return remainder_; }

 private:
  std::string remainder_;
};

class EvaluationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Gram matrix too ill-conditioned for the numerical construction route.
class ConditioningError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Node or term count beyond the configured budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace octaboson
