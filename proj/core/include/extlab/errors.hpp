#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace extlab {

// Every failure the library can signal carries a stable machine-readable code
// (used by the CLI for exit status and by reports for witness records) plus a
// human-readable message.
enum class ErrorCode {
  // construction / validation
  NotCommutative,
  NotAssociative,
  BadUnit,
  NotLocal,
  UnitIdeal,
  InfiniteDimensional,
  NonMonic,
  FieldMismatch,
  BadDegree,
  ZeroPolynomial,
  NonUnitConstantTerm,
  DimensionMismatch,
  // computation limits
  BudgetExceeded,
  SamplingExhausted,
  FieldTooSmall,
  NzdPreconditionFailed,
  // harness
  ParseError,
  ValidationError,
  UnknownSuite,
  IoError,
  Internal,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised when a resolution or homology computation would exceed its budget.
// Carries how far the computation got so callers can report partial evidence.
class BudgetExceededError : public Error {
 public:
  BudgetExceededError(std::string stage, int degree_reached, std::string message)
      : Error(ErrorCode::BudgetExceeded, message),
        stage_(std::move(stage)),
        degree_reached_(degree_reached) {}

  const std::string& stage() const noexcept { return stage_; }
  int degree_reached() const noexcept { return degree_reached_; }

 private:
  std::string stage_;
  int degree_reached_;
};

// choose_alpha: the current field has no admissible element; e_needed is a
// sufficient extension degree of the prime field.
class FieldTooSmallError : public Error {
 public:
  FieldTooSmallError(int e_needed, std::string message)
      : Error(ErrorCode::FieldTooSmall, message), e_needed_(e_needed) {}

  int e_needed() const noexcept { return e_needed_; }

 private:
  int e_needed_;
};

class NzdPreconditionError : public Error {
 public:
  NzdPreconditionError(std::string which_module, std::string message)
      : Error(ErrorCode::NzdPreconditionFailed, message),
        which_(std::move(which_module)) {}

  const std::string& which_module() const noexcept { return which_; }

 private:
  std::string which_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool cond, ErrorCode code, const std::string& message) {
  if (!cond) throw Error(code, message);
}

}  // namespace extlab
