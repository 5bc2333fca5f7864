#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace binoidal {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text; line and column are 1-based.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(msg + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line), column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_, column_;
};

/// Structurally invalid presentation or complex (duplicate names, unknown
/// generators, uncovered vertices, ...).
class InvalidInput : public Error {
public:
  using Error::Error;
};

/// Completion ran out of its candidate budget. Never a wrong answer, only
/// no answer.
class BudgetExceeded : public Error {
public:
  explicit BudgetExceeded(std::size_t budget)
      : Error("BudgetExceeded: completion exceeded " + std::to_string(budget) + " rule candidates"),
        budget_(budget) {}
  std::size_t budget() const noexcept { return budget_; }

private:
  std::size_t budget_;
};

/// An operation was called outside its domain. `code` is a stable tag such
/// as "NotPositive" or "NoPositiveGrading".
class PreconditionError : public Error {
public:
  PreconditionError(std::string code, const std::string& detail)
      : Error(code + (detail.empty() ? "" : ": " + detail)), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

} // namespace binoidal
