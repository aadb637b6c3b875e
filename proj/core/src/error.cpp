#include "fellkit/error.hpp"

namespace fellkit {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::NotLatinSquare: return "NotLatinSquare";
    case ErrorCode::NotAbelian: return "NotAbelian";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::InvalidAction: return "InvalidAction";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::BundleMismatch: return "BundleMismatch";
    case ErrorCode::FiberViolation: return "FiberViolation";
    case ErrorCode::AxiomFailure: return "AxiomFailure";
    case ErrorCode::NotARepresentation: return "NotARepresentation";
    case ErrorCode::NotInAlgebra: return "NotInAlgebra";
    case ErrorCode::NotSpectral: return "NotSpectral";
    case ErrorCode::NotEquivariant: return "NotEquivariant";
    case ErrorCode::NotHomomorphism: return "NotHomomorphism";
    case ErrorCode::NotAnAction: return "NotAnAction";
    case ErrorCode::SpectralGapFailure: return "SpectralGapFailure";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
  }
  return "UnknownError";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace fellkit
