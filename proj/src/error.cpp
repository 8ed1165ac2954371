#include "qbsa/error.hpp"

namespace qbsa {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::NonComposablePath: return "NonComposablePath";
    case ErrorCode::NotParallel: return "NotParallel";
    case ErrorCode::ZeroScalar: return "ZeroScalar";
    case ErrorCode::RelationTooShort: return "RelationTooShort";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::SearchLimit: return "SearchLimit";
    case ErrorCode::NotSpecialBiserial: return "NotSpecialBiserial";
    case ErrorCode::NotValidated: return "NotValidated";
    case ErrorCode::NotASource: return "NotASource";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::BadCharacteristic: return "BadCharacteristic";
    case ErrorCode::ClassificationFailure: return "ClassificationFailure";
    case ErrorCode::IndependenceViolation: return "IndependenceViolation";
    case ErrorCode::InequalityViolation: return "InequalityViolation";
    case ErrorCode::InductionMismatch: return "InductionMismatch";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

bool is_internal(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ClassificationFailure:
    case ErrorCode::IndependenceViolation:
    case ErrorCode::InequalityViolation:
    case ErrorCode::InductionMismatch:
    case ErrorCode::InvariantViolation:
      return true;
    default:
      return false;
  }
}

namespace {

std::string render(ErrorCode code, const std::string& message, const std::string& stage) {
  std::string out(to_string(code));
  if (!stage.empty()) out += " [" + stage + "]";
  out += ": " + message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message, std::string stage)
    : std::runtime_error(render(code, message, stage)),
      code_(code),
      stage_(std::move(stage)),
      detail_(message) {}

Error Error::with_stage(std::string stage) const {
  if (!stage_.empty()) return *this;
  return Error(code_, detail_, std::move(stage));
}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace qbsa
