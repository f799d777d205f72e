#include "gerbes/error.hpp"

namespace gerbes {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotAComplexStructure: return "NotAComplexStructure";
    case ErrorCode::TypeConditionFailed: return "TypeConditionFailed";
    case ErrorCode::TorusMismatch: return "TorusMismatch";
    case ErrorCode::NotInSubgroup: return "NotInSubgroup";
    case ErrorCode::InternalMismatch: return "InternalMismatch";
    case ErrorCode::ClosedFormMismatch: return "ClosedFormMismatch";
    case ErrorCode::FirstObstructionNonzero: return "FirstObstructionNonzero";
    case ErrorCode::MalformedRational: return "MalformedRational";
    case ErrorCode::NonIncreasingIndices: return "NonIncreasingIndices";
    case ErrorCode::BadDimensions: return "BadDimensions";
    case ErrorCode::MalformedProblem: return "MalformedProblem";
    case ErrorCode::UnknownCommand: return "UnknownCommand";
  }
  return "Unknown";
}

}  // namespace gerbes
