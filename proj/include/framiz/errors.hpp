#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace framiz {

enum class ErrorCode {
  NonPrimeModulus,
  ModulusIncompatibleWithD,
  UnsupportedD,
  UnsupportedVariable,
  ExhaustedField,
  DivisionByZero,
  BadSpecialization,
  MixedFields,
  DimensionMismatch,
  DimensionOverflow,
  NotIdempotent,
  NotOrthogonal,
  NotPartitionOfUnity,
  Singular,
  BadNormalization,
  UnsupportedKind,
  UnsupportedBoundary,
  IndexOutOfRange,
  EqualIndices,
  BadPartition,
  BadComposition,
  HeterogeneousBlocks,
  NoBoundary,
  UnresolvedSymbol,
  ParseError,
  InapplicablePreset,
  UnknownFamily,
  ConfigError,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace framiz
