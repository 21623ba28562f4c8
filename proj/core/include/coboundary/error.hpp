#pragma once

#include <stdexcept>
#include <string>

namespace coboundary {

// Error categories; the CLI maps these onto process exit codes.
enum class ErrorCode {
  DivisionByZero,
  DimensionMismatch,
  ParseError,
  InvalidStep,
  ContextMismatch,
  BadParameter,
  CyclicGraph,
  SizeLimit,
  NotDominant,
  StripViolation,
  BadPath,
  IndexOutOfRange,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace coboundary
