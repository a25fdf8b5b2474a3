#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ringlab {

enum class ErrorKind {
  RingMismatch,
  InvalidArgument,
  ValidationFailed,
  OrderCapExceeded,
  LatticeCapExceeded,
  NotIdempotent,
  NotAnIdeal,
  NotProperIdeal,
  BimoduleLawViolation,
  ClosureViolation,
  UnsupportedFieldOrder,
  InternalInvariantViolation,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorKind kind);

class RingError : public std::runtime_error {
 public:
  RingError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ringlab
