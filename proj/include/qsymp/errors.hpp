#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qsymp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Operands live in different ambient spaces or fields.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// An exhaustive computation would exceed the configured step budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::string what, std::uint64_t required, std::uint64_t budget)
      : Error(what + ": needs " + std::to_string(required) + " steps, budget is " +
              std::to_string(budget)),
        required_(required),
        budget_(budget) {}

  std::uint64_t required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  // 1-based; 0 when the error is not tied to a line.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Two generators of a would-be stabilizer do not commute.
class CommutationViolation : public Error {
 public:
  CommutationViolation(std::size_t first, std::size_t second)
      : Error("generators " + std::to_string(first + 1) + " and " + std::to_string(second + 1) +
              " do not commute"),
        first_(first),
        second_(second) {}

  // 0-based generator indices.
  std::size_t first() const { return first_; }
  std::size_t second() const { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

}  // namespace qsymp
