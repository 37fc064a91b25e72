#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hrvtvm {

enum class ErrorKind {
  Io,
  Parse,
  Validation,
  TooShort,
  EmptyDirectory,
  EmptyInput,
  NoPointInRadius,
  InvalidArgument,
  TooFewDistinct,
  LengthMismatch,
  LabelCount,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for the library. `kind()` distinguishes the failure;
/// `line()` is the 1-based input line for parse/validation errors, 0 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::size_t line = 0)
      : std::runtime_error(message), kind_(kind), line_(line) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ErrorKind kind_;
  std::size_t line_;
};

}  // namespace hrvtvm
