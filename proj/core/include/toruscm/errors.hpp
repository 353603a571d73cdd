#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toruscm {

enum class ErrorCode {
  NotSquarefree,
  ConjNotAutomorphism,
  ConjNotInvolution,
  NotRealUnderEmbedding,
  Inconsistent,
  DimensionMismatch,
  FieldMismatch,
  Singular,
  NotSymmetric,
  NotAntisymmetric,
  NotComplexStructure,
  IncompatibleMetric,
  NotPositiveDefinite,
  NotInvolution,
  BetaNotAdmissible,
  BasisDependent,
  NotCMType,
  NotFoundWithinBudget,
  UnsupportedField,
  IncompatiblePolarization,
  SubfieldDataNotClosed,
  RhoNotNegativeDefinite,
  SingularA,
  GraphConditionFails,
  SingularGamma,
  ModeParityMismatch,
  DegenerateRestriction,
  InvalidArgument,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace toruscm
