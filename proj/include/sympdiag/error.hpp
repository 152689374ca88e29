#pragma once

#include <stdexcept>
#include <string>

namespace sympdiag {

enum class ErrorCode {
  ParseError,
  SchemaError,
  RationalFormat,
  UnknownName,
  Usage,
  DimensionMismatch,
  SubspaceNotNested,
  NotAnIdeal,
  NotSubalgebra,
  NotClosed,
  InvalidFlag,
  NestingViolation,
  ChainNotNested,
  Incomplete,
  NoRepulsiveVertex,
  SplitInvariantFailed,
  IrrationalSpectrum,
  DescentStuck,
  NotSemisimple,
  NotSeminilpotent,
  DeformationFailed,
  AuditFailed,
  NotSimple,
  NotLagrangian,
  DegenerateForm,
  NotTransverse,
  KernelNotIdeal,
  NotSolvable,
  Internal
};

inline const char* code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::SchemaError: return "SCHEMA_ERROR";
    case ErrorCode::RationalFormat: return "RATIONAL_FORMAT_ERROR";
    case ErrorCode::UnknownName: return "UNKNOWN_NAME";
    case ErrorCode::Usage: return "USAGE";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::SubspaceNotNested: return "SUBSPACE_NOT_NESTED";
    case ErrorCode::NotAnIdeal: return "NOT_AN_IDEAL";
    case ErrorCode::NotSubalgebra: return "NOT_SUBALGEBRA";
    case ErrorCode::NotClosed: return "NOT_CLOSED";
    case ErrorCode::InvalidFlag: return "INVALID_FLAG";
    case ErrorCode::NestingViolation: return "NESTING_VIOLATION";
    case ErrorCode::ChainNotNested: return "CHAIN_NOT_NESTED";
    case ErrorCode::Incomplete: return "INCOMPLETE";
    case ErrorCode::NoRepulsiveVertex: return "NO_REPULSIVE_VERTEX";
    case ErrorCode::SplitInvariantFailed: return "SPLIT_INVARIANT_FAILED";
    case ErrorCode::IrrationalSpectrum: return "IRRATIONAL_SPECTRUM";
    case ErrorCode::DescentStuck: return "DESCENT_STUCK";
    case ErrorCode::NotSemisimple: return "NOT_SEMISIMPLE";
    case ErrorCode::NotSeminilpotent: return "NOT_SEMINILPOTENT";
    case ErrorCode::DeformationFailed: return "DEFORMATION_FAILED";
    case ErrorCode::AuditFailed: return "AUDIT_FAILED";
    case ErrorCode::NotSimple: return "NOT_SIMPLE";
    case ErrorCode::NotLagrangian: return "NOT_LAGRANGIAN";
    case ErrorCode::DegenerateForm: return "DEGENERATE_FORM";
    case ErrorCode::NotTransverse: return "NOT_TRANSVERSE";
    case ErrorCode::KernelNotIdeal: return "KERNEL_NOT_IDEAL";
    case ErrorCode::NotSolvable: return "NOT_SOLVABLE";
    case ErrorCode::Internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

// Exit status used by the command line front end.
inline int exit_status(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::SchemaError:
    case ErrorCode::RationalFormat:
    case ErrorCode::UnknownName:
    case ErrorCode::Usage:
    case ErrorCode::DimensionMismatch:
      return 2;
    default:
      return 3;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(code_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sympdiag
