#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace satgb {

/// Inconsistent shapes: length mismatches, foreign contexts, bad dimensions.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An argument outside an operation's domain (zero vector, non-homogeneous input, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exponent or degree arithmetic left the representable range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// The engine declined to start (termination not guaranteed).
class RefusedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A run exceeded its time budget.
class TimeoutError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  enum class Kind { kSyntax, kUnknownIndeterminate, kZeroGenerator, kDimensionMismatch };

  ParseError(Kind kind, int line, int column, const std::string& message)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        kind_(kind),
        line_(line),
        column_(column) {}

  Kind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  Kind kind_;
  int line_;
  int column_;
};

namespace detail {

[[noreturn]] inline void throwOverflow(const char* what) {
  throw OverflowError(std::string("exponent overflow in ") + what);
}

inline std::int32_t checkedAdd(std::int32_t a, std::int32_t b, const char* what = "term product") {
  std::int32_t out;
  if (__builtin_add_overflow(a, b, &out)) throwOverflow(what);
  return out;
}

inline std::int32_t narrow(std::int64_t v, const char* what) {
  if (v > std::numeric_limits<std::int32_t>::max() || v < std::numeric_limits<std::int32_t>::min())
    throwOverflow(what);
  return static_cast<std::int32_t>(v);
}

}  // namespace detail
}  // namespace satgb
