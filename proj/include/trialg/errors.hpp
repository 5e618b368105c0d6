#pragma once

#include <stdexcept>
#include <string>

namespace trialg {

enum class ErrorKind {
  FieldMismatch,
  AmbientMismatch,
  ShapeMismatch,
  NotInSpan,
  NonAssociative,
  UnitLawViolation,
  DimMismatch,
  ZeroModule,
  NotFaithful,
  CharTooSmall,
  BudgetExceeded,
  Undecided,
  SigmaMissing,
  SigmaNotAutomorphism,
  NotAutomorphism,
  NotEndomorphism,
  NotBlockPreserving,
  NotMPreserving,
  NotSigmaCentral,
  CommutativeAlgebra,
  CentralElement,
  PreconditionFails,
  NotSigmaDerivation,
  NotSigmaBiderivation,
  NotSigmaCommuting,
  NotAnIdeal,
  Parse,
  InvalidArgument,
};

const char* error_kind_name(ErrorKind kind);

/// Input or precondition failure. Everything thrown by the library that is
/// not a TheoremViolation derives from this.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// A verified-hypothesis theorem failed on a concrete instance. Never caught
/// inside the library; the CLI maps it to its own exit code.
class TheoremViolation : public std::runtime_error {
 public:
  TheoremViolation(std::string theorem, const std::string& detail)
      : std::runtime_error("TheoremViolation[" + theorem + "]: " + detail), theorem_(std::move(theorem)) {}

  const std::string& theorem() const noexcept { return theorem_; }

 private:
  std::string theorem_;
};

}  // namespace trialg
