#pragma once

#include <stdexcept>
#include <string>

namespace fellkit {

// Every failure the library can raise, one code per documented condition.
// Check-style operations report defects through certificates instead of
// throwing; exceptions are reserved for malformed inputs.
enum class ErrorCode {
  // linear algebra
  NotHermitian,
  NoConvergence,
  DimensionMismatch,
  // group construction
  NotAssociative,
  NoIdentity,
  NoInverse,
  NotLatinSquare,
  NotAbelian,
  BadParameter,
  // bundles
  InvalidAction,
  NotAnIdeal,
  BundleMismatch,
  FiberViolation,
  AxiomFailure,
  NotARepresentation,
  // coactions
  NotInAlgebra,
  NotSpectral,
  NotEquivariant,
  NotHomomorphism,
  NotAnAction,
  SpectralGapFailure,
  // serialization
  SchemaViolation,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& message);

}  // namespace fellkit
