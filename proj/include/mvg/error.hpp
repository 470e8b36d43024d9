#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mvg {

enum class ErrorCode {
  InvalidSize,
  InvalidAlgebra,
  AlgebraMismatch,
  IndexMismatch,
  NotSquare,
  NotReflexive,
  NotChain,
  Incompatible,
  Unstable,
  Budget,
  Syntax,
  UnknownAtom,
  UnknownLabel,
  Schema,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidSize: return "invalid-size";
    case ErrorCode::InvalidAlgebra: return "invalid-algebra";
    case ErrorCode::AlgebraMismatch: return "algebra-mismatch";
    case ErrorCode::IndexMismatch: return "index-mismatch";
    case ErrorCode::NotSquare: return "not-square";
    case ErrorCode::NotReflexive: return "not-reflexive";
    case ErrorCode::NotChain: return "not-chain";
    case ErrorCode::Incompatible: return "incompatible";
    case ErrorCode::Unstable: return "unstable";
    case ErrorCode::Budget: return "budget-exceeded";
    case ErrorCode::Syntax: return "syntax";
    case ErrorCode::UnknownAtom: return "unknown-atom";
    case ErrorCode::UnknownLabel: return "unknown-label";
    case ErrorCode::Schema: return "schema";
  }
  return "unknown";
}

/// Base exception for every failure raised by the library. The code lets
/// callers branch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class BudgetError : public Error {
 public:
  BudgetError(std::uint64_t required, std::uint64_t budget, const std::string& what)
      : Error(ErrorCode::Budget, what + ": search space of " + std::to_string(required) +
                                     " exceeds budget " + std::to_string(budget)),
        required_(required),
        budget_(budget) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::vector<std::string> expected, const std::string& found)
      : Error(ErrorCode::Syntax, format(position, expected, found)),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  static std::string format(std::size_t position, const std::vector<std::string>& expected,
                            const std::string& found) {
    std::string msg = "syntax error at position " + std::to_string(position) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
    msg += ", found " + found;
    return msg;
  }

  std::size_t position_;
  std::vector<std::string> expected_;
};

}  // namespace mvg
