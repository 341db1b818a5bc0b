#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slh {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidParameter : Error {
  using Error::Error;
};

// Thrown by exact division when the divisor does not divide exactly.
struct NonDivisible : Error {
  using Error::Error;
};

struct SingularMatrix : Error {
  using Error::Error;
};

struct NotAMember : Error {
  using Error::Error;
};

// gamma3_check found no scalar product among the candidate orderings.
struct ConventionFailure : Error {
  using Error::Error;
};

// A verified algebraic law failed; falsifies the implementation.
struct LawViolation : Error {
  using Error::Error;
};

struct BudgetExceeded : Error {
  std::size_t partial_count;
  BudgetExceeded(const std::string& msg, std::size_t count)
      : Error(msg), partial_count(count) {}
};

struct WordSyntaxError : InvalidParameter {
  std::size_t position;  // offset of the offending token in the input
  WordSyntaxError(const std::string& msg, std::size_t pos)
      : InvalidParameter(msg), position(pos) {}
};

}  // namespace slh
