#include "framiz/errors.hpp"

namespace framiz {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrimeModulus: return "NonPrimeModulus";
    case ErrorCode::ModulusIncompatibleWithD: return "ModulusIncompatibleWithD";
    case ErrorCode::UnsupportedD: return "UnsupportedD";
    case ErrorCode::UnsupportedVariable: return "UnsupportedVariable";
    case ErrorCode::ExhaustedField: return "ExhaustedField";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::BadSpecialization: return "BadSpecialization";
    case ErrorCode::MixedFields: return "MixedFields";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DimensionOverflow: return "DimensionOverflow";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::NotPartitionOfUnity: return "NotPartitionOfUnity";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::BadNormalization: return "BadNormalization";
    case ErrorCode::UnsupportedKind: return "UnsupportedKind";
    case ErrorCode::UnsupportedBoundary: return "UnsupportedBoundary";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EqualIndices: return "EqualIndices";
    case ErrorCode::BadPartition: return "BadPartition";
    case ErrorCode::BadComposition: return "BadComposition";
    case ErrorCode::HeterogeneousBlocks: return "HeterogeneousBlocks";
    case ErrorCode::NoBoundary: return "NoBoundary";
    case ErrorCode::UnresolvedSymbol: return "UnresolvedSymbol";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InapplicablePreset: return "InapplicablePreset";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

}  // namespace framiz
