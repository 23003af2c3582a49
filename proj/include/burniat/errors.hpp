#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace burniat {

// Caller-facing failures: bad input, out-of-range arithmetic, exhausted budgets.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 3 does not divide d + a + b + c, or starred coordinates disagree with the
// truncated ones.
class MembershipError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ParseError : public DomainError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : DomainError(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class OverflowError : public DomainError {
 public:
  using DomainError::DomainError;
};

class BudgetExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

// A torsion twist that does not keep a base-case divisor in reduced form.
class InvalidTau : public DomainError {
 public:
  using DomainError::DomainError;
};

// Failures that mean the theory and the implementation disagree. These are
// never recovered from.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ClassificationGap : public InternalError {
 public:
  using InternalError::InternalError;
};

class InternalInconsistency : public InternalError {
 public:
  using InternalError::InternalError;
};

}  // namespace burniat
