#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace galicurve {

enum class ErrorCode {
  Io,
  Syntax,
  Schema,
  UnknownFunction,
  UnboundConstant,
  Domain,
  DivisionByZero,
  NonInvertible,
  NotAdmissible,
  InflectionPoint,
  IsotropicNormal,
  VanishingTorsion,
  MaxDepth,
  TooFewPoints,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

// Every failure in the library surfaces as this exception. The C boundary
// (galicurve.h) catches it and maps `code` onto the status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  Error(ErrorCode code, const std::string& message, std::size_t offset)
      : std::runtime_error(message), code_(code), offset_(offset) {}

  ErrorCode code() const noexcept { return code_; }
  // 0-based byte offset into the source text, set for parse errors.
  std::optional<std::size_t> offset() const noexcept { return offset_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> offset_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace galicurve
