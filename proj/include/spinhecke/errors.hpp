#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace spinhecke {

class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// Malformed expression; offset is a byte position in the input.
class ParseError : public Error {
 public:
  ParseError(std::string code, const std::string& message, std::size_t offset)
      : Error(std::move(code), message + " at offset " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Well-formed request outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Rewriting exceeded its step budget.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& message) : Error("rewrite_budget", message) {}
};

}  // namespace spinhecke
