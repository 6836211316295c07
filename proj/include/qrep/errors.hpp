#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qrep {

// Exit codes shared by the CLI and its tests.
enum class ExitCode : int {
  ok = 0,
  parse_error = 1,
  infinite_type = 2,
  not_a_root = 3,
  mismatch = 4,
  internal = 5,
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  [[nodiscard]] virtual ExitCode exit_code() const noexcept { return ExitCode::internal; }
};

/// Malformed input; carries a 1-based line and column when known (0 otherwise).
class ParseError : public Error {
 public:
  ParseError(std::string message, int line = 0, int column = 0)
      : Error(format(message, line, column)), line_(line), column_(column) {}

  [[nodiscard]] int line() const noexcept { return line_; }
  [[nodiscard]] int column() const noexcept { return column_; }
  [[nodiscard]] ExitCode exit_code() const noexcept override { return ExitCode::parse_error; }

 private:
  static std::string format(const std::string& message, int line, int column) {
    if (line <= 0) return message;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
  }

  int line_;
  int column_;
};

/// Operation requires a quiver of finite representation type.
class InfiniteTypeError : public Error {
 public:
  using Error::Error;
  [[nodiscard]] ExitCode exit_code() const noexcept override { return ExitCode::infinite_type; }
};

/// Dimension vector is not a positive root (q(d) != 1 or d has a negative entry).
class NotARootError : public Error {
 public:
  NotARootError(std::string message, long long tits_value)
      : Error(std::move(message)), tits_value_(tits_value) {}
  [[nodiscard]] long long tits_value() const noexcept { return tits_value_; }
  [[nodiscard]] ExitCode exit_code() const noexcept override { return ExitCode::not_a_root; }

 private:
  long long tits_value_;
};

/// Operands live on different quivers or fields, or have incompatible shapes.
class MismatchError : public Error {
 public:
  using Error::Error;
  [[nodiscard]] ExitCode exit_code() const noexcept override { return ExitCode::mismatch; }
};

/// A mathematical invariant that must hold did not; always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// The randomized generic-representation oracle ran out of retries.
class RetryCapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace qrep
