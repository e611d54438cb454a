#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace docon {

// Every failure surfaced by the library maps onto one of these codes; the CLI
// uses them verbatim as process exit statuses.
enum class ErrorCode : int {
  Usage = 2,
  Syntax = 3,
  DivisionByZero = 4,
  NotPrime = 5,
  Domain = 6,
  Structural = 7,
  Mismatch = 8,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// An instance lacks an operation its kind requires (or carries one it must not).
class StructuralError : public Error {
 public:
  explicit StructuralError(const std::string& what) : Error(ErrorCode::Structural, what) {}
};

/// Two arguments that must agree (kinds, coefficient rings, key sets) do not.
class MismatchError : public Error {
 public:
  explicit MismatchError(const std::string& what) : Error(ErrorCode::Mismatch, what) {}
};

class DivisionByZero : public Error {
 public:
  explicit DivisionByZero(const std::string& what) : Error(ErrorCode::DivisionByZero, what) {}
};

/// Input outside an operation's stated domain (factor 0, isPrime 1, non-canonical Bin, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorCode::Domain, what) {}
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::vector<std::string> expected, const std::string& what)
      : Error(ErrorCode::Syntax, what), position_(position), expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

}  // namespace docon
