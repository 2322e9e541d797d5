#include "hullprob/error.hpp"

namespace hullprob {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Io: return "IoError";
    case ErrorKind::InvalidInstance: return "InvalidInstance";
    case ErrorKind::InvalidContext: return "InvalidContext";
    case ErrorKind::DegenerateInstance: return "DegenerateInstance";
    case ErrorKind::DegenerateSupport: return "DegenerateSupport";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::CollinearCandidates: return "CollinearCandidates";
    case ErrorKind::EmptyOthers: return "EmptyOthers";
    case ErrorKind::NonIntegerAreas: return "NonIntegerAreas";
    case ErrorKind::BudgetOverflow: return "BudgetOverflow";
    case ErrorKind::InvalidEpsilon: return "InvalidEpsilon";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::RoundedDegeneracy: return "RoundedDegeneracy";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::PropertyViolation: return "PropertyViolation";
    case ErrorKind::NonIntegralCount: return "NonIntegralCount";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::vector<std::size_t> witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      witness_(std::move(witness)) {}

}  // namespace hullprob
