#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace doubler {

enum class ErrorCode {
  DivisionByZero,
  ParseError,
  InvalidCsParameter,
  IndexOutOfRange,
  DimensionMismatch,
  TowerMismatch,
  NotInvertible,
  NonScalarNorm,
  NonScalarTrace,
  NormNotOne,
  ZeroSeed,
  IsotropicSeed,
  AllZeroSeeds,
  NoImaginaryElement,
  UnknownIdentity,
  InternalError,
};

/// Stable name of an error code, as emitted in CLI error objects.
std::string_view error_code_name(ErrorCode code) noexcept;

/// Every domain failure in the library is reported as an Error carrying a code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view code_name() const noexcept { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

/// Parse failure with the zero-based offset of the offending character.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(ErrorCode::ParseError,
              message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace doubler
