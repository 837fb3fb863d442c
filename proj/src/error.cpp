#include "slcg/error.hpp"

namespace slcg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::MalformedTable: return "MalformedTable";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::SizeOutOfRange: return "SizeOutOfRange";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::NonLattice: return "NonLattice";
    case ErrorKind::NonDistributive: return "NonDistributive";
    case ErrorKind::BadNegation: return "BadNegation";
    case ErrorKind::CarrierMismatch: return "CarrierMismatch";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NonAssociative: return "NonAssociative";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::NotSubgroup: return "NotSubgroup";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::MissingConstant: return "MissingConstant";
    case ErrorKind::NotMeetClosed: return "NotMeetClosed";
    case ErrorKind::MixedCarriers: return "MixedCarriers";
    case ErrorKind::Mismatch: return "Mismatch";
    case ErrorKind::NotSurjective: return "NotSurjective";
    case ErrorKind::EmptySubset: return "EmptySubset";
    case ErrorKind::NotStratified: return "NotStratified";
    case ErrorKind::NotAnSLCG: return "NotAnSLCG";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::AssertionFailed: return "AssertionFailed";
    case ErrorKind::GuardExceeded: return "GuardExceeded";
    case ErrorKind::UnknownRecipe: return "UnknownRecipe";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, nlohmann::json witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      witness_(std::move(witness)) {}

nlohmann::json Error::to_json() const {
  nlohmann::json j;
  j["error"] = std::string(to_string(kind_));
  j["message"] = what();
  if (!witness_.is_null()) j["witness"] = witness_;
  return j;
}

}  // namespace slcg
