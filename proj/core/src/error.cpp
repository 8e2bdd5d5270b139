#include "doubler/error.hpp"

namespace doubler {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidCsParameter: return "InvalidCsParameter";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::TowerMismatch: return "TowerMismatch";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NonScalarNorm: return "NonScalarNorm";
    case ErrorCode::NonScalarTrace: return "NonScalarTrace";
    case ErrorCode::NormNotOne: return "NormNotOne";
    case ErrorCode::ZeroSeed: return "ZeroSeed";
    case ErrorCode::IsotropicSeed: return "IsotropicSeed";
    case ErrorCode::AllZeroSeeds: return "AllZeroSeeds";
    case ErrorCode::NoImaginaryElement: return "NoImaginaryElement";
    case ErrorCode::UnknownIdentity: return "UnknownIdentity";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "InternalError";
}

}  // namespace doubler
