#include "dlens/error.hpp"

namespace dlens {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MissingComposite: return "MissingComposite";
    case ErrorCode::LawViolation: return "LawViolation";
    case ErrorCode::EndpointMismatch: return "EndpointMismatch";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::Incomplete: return "Incomplete";
    case ErrorCode::NotAFunctor: return "NotAFunctor";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotSaturated: return "NotSaturated";
    case ErrorCode::AxiomViolation: return "AxiomViolation";
    case ErrorCode::ShapeError: return "ShapeError";
    case ErrorCode::ObjectMismatch: return "ObjectMismatch";
    case ErrorCode::PutGetViolation: return "PutGetViolation";
    case ErrorCode::AnchorMismatch: return "AnchorMismatch";
    case ErrorCode::LInapplicableAtBound: return "LInapplicableAtBound";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::string witness,
             int axiom)
    : std::runtime_error(std::string(to_string(code)) + ": " + message +
                         (witness.empty() ? "" : " [" + witness + "]")),
      code_(code),
      witness_(std::move(witness)),
      axiom_(axiom) {}

}  // namespace dlens
