#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qbsa {

enum class ErrorCode {
  // Invalid input.
  ParseError,
  UnknownSymbol,
  NonComposablePath,
  NotParallel,
  ZeroScalar,
  RelationTooShort,
  NotAdmissible,
  SearchLimit,
  NotSpecialBiserial,
  NotValidated,
  NotASource,
  NotClosed,
  BadCharacteristic,
  // Internal invariant violations. Any of these means either a bug or an
  // input that slipped past validation.
  ClassificationFailure,
  IndependenceViolation,
  InequalityViolation,
  InductionMismatch,
  InvariantViolation,
};

std::string_view to_string(ErrorCode code) noexcept;

/// True for codes that signal a broken internal invariant rather than bad
/// input. The CLI maps these to exit code 2.
bool is_internal(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string stage = {});

  ErrorCode code() const noexcept { return code_; }
  const std::string& stage() const noexcept { return stage_; }
  const std::string& detail() const noexcept { return detail_; }

  /// Returns a copy tagged with a pipeline stage name, unless one is set.
  Error with_stage(std::string stage) const;

 private:
  ErrorCode code_;
  std::string stage_;
  std::string detail_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace qbsa
