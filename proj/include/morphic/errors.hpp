#pragma once

#include <stdexcept>
#include <string>

namespace morphic {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// The input system description itself is unusable.
struct InputError : Error {
  using Error::Error;
};

struct ParseError : InputError {
  using InputError::InputError;
};
struct AlphabetMismatch : InputError {
  using InputError::InputError;
};
struct NotProlongable : InputError {
  using InputError::InputError;
};
struct FiniteFixedPoint : InputError {
  using InputError::InputError;
};
struct EmptyPattern : InputError {
  using InputError::InputError;
};

// A configured cap was reached. The pipeline reports Inconclusive, never a
// wrong verdict, when one of these escapes a stage.
struct ResourceLimit : Error {
  using Error::Error;
};

struct PrecisionExhausted : ResourceLimit {
  using ResourceLimit::ResourceLimit;
};
struct SearchExhausted : ResourceLimit {
  using ResourceLimit::ResourceLimit;
};
struct IterationCapExceeded : ResourceLimit {
  using ResourceLimit::ResourceLimit;
};

// Broken internal invariants. Any of these is a bug, not a property of the
// input; tests treat them as failures.
struct InternalError : Error {
  using Error::Error;
};

struct NoGrowingLetter : InternalError {
  using InternalError::InternalError;
};
struct ConstructionDiverged : InternalError {
  using InternalError::InternalError;
};
struct PreconditionViolated : InternalError {
  using InternalError::InternalError;
};
struct StitchMismatch : InternalError {
  using InternalError::InternalError;
};
struct MalformedScheme : InternalError {
  using InternalError::InternalError;
};
struct LabelMismatch : InternalError {
  using InternalError::InternalError;
};
struct SizeBoundViolated : InternalError {
  using InternalError::InternalError;
};
struct NotPrimitiveError : InternalError {
  using InternalError::InternalError;
};
struct WitnessScanExhausted : InternalError {
  using InternalError::InternalError;
};

}  // namespace morphic
