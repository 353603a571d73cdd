#include "toruscm/errors.hpp"

namespace toruscm {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::ConjNotAutomorphism: return "ConjNotAutomorphism";
    case ErrorCode::ConjNotInvolution: return "ConjNotInvolution";
    case ErrorCode::NotRealUnderEmbedding: return "NotRealUnderEmbedding";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorCode::NotComplexStructure: return "NotComplexStructure";
    case ErrorCode::IncompatibleMetric: return "IncompatibleMetric";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::NotInvolution: return "NotInvolution";
    case ErrorCode::BetaNotAdmissible: return "BetaNotAdmissible";
    case ErrorCode::BasisDependent: return "BasisDependent";
    case ErrorCode::NotCMType: return "NotCMType";
    case ErrorCode::NotFoundWithinBudget: return "NotFoundWithinBudget";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::IncompatiblePolarization: return "IncompatiblePolarization";
    case ErrorCode::SubfieldDataNotClosed: return "SubfieldDataNotClosed";
    case ErrorCode::RhoNotNegativeDefinite: return "RhoNotNegativeDefinite";
    case ErrorCode::SingularA: return "SingularA";
    case ErrorCode::GraphConditionFails: return "GraphConditionFails";
    case ErrorCode::SingularGamma: return "SingularGamma";
    case ErrorCode::ModeParityMismatch: return "ModeParityMismatch";
    case ErrorCode::DegenerateRestriction: return "DegenerateRestriction";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace toruscm
