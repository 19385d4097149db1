#pragma once

#include <stdexcept>
#include <string>

namespace hypertrans {

/// Stable machine-readable error codes. The CLI prints the token from
/// error_token() on stderr, so these values are part of the tool's interface.
enum class ErrorCode {
  InvalidHypergraph,
  InvalidFamily,
  LabelCollision,
  NotDisjoint,
  NotComponentSubset,
  VerticesNotCovered,
  UniverseMismatch,
  UniverseTooSmall,
  LoopRejected,
  NotInDomain,
  NotNonredundant,
  NotComponentMaximal,
  ImagesNotDisjoint,
  ImageCountCollision,
  DecompositionViolation,
  DistinguishedNotInFamily,
  NotUpwardClosed,
  TooManyMaps,
  TooFewMaps,
  NotPairwiseDisjoint,
  NotInCoincidence,
  DecompositionMismatch,
  NotClosed,
  NullWNotAllowed,
  NullNotInFamily,
  WNotDisjointFromFamily,
  NotAmenableFamily,
  NotAmenableIllDefinedPi,
  NotAmenableIllDefinedD,
  NotAmenableFailsConditions,
  EquivalentEdgesTooLarge,
  EdgesConfinedToSummand,
};

const char* error_token(ErrorCode code);

class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_token(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hypertrans
