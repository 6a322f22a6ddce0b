#include "seedkit/error.hpp"

namespace seedkit {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownDirection: return "UnknownDirection";
    case Errc::NotSignSkewSymmetric: return "NotSignSkewSymmetric";
    case Errc::InconsistentLabels: return "InconsistentLabels";
    case Errc::NotExchangeable: return "NotExchangeable";
    case Errc::LaurentViolation: return "LaurentViolation";
    case Errc::BadSpec: return "BadSpec";
    case Errc::NotFrozen: return "NotFrozen";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::NameClash: return "NameClash";
    case Errc::BadGlueSpec: return "BadGlueSpec";
    case Errc::NotGlueable: return "NotGlueable";
    case Errc::SearchBoundExceeded: return "SearchBoundExceeded";
    case Errc::SourceTargetMismatch: return "SourceTargetMismatch";
    case Errc::NotBiadmissible: return "NotBiadmissible";
    case Errc::NotAHomAfterMutation: return "NotAHomAfterMutation";
    case Errc::NotAHom: return "NotAHom";
    case Errc::HomVerificationFailed: return "HomVerificationFailed";
    case Errc::NotNoncontractible: return "NotNoncontractible";
    case Errc::NotSurjectiveOnVariables: return "NotSurjectiveOnVariables";
    case Errc::IsoVerificationFailed: return "IsoVerificationFailed";
    case Errc::ContractionUndefined: return "ContractionUndefined";
    case Errc::ZeroImage: return "ZeroImage";
    case Errc::NotAcyclic: return "NotAcyclic";
    case Errc::RankTooLarge: return "RankTooLarge";
    case Errc::Overflow: return "Overflow";
    case Errc::BadRequest: return "BadRequest";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace seedkit
