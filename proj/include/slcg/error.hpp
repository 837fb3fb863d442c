#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

namespace slcg {

enum class ErrorKind {
  // input / schema
  ParseError,
  SchemaError,
  MalformedTable,
  UnknownElement,
  SizeOutOfRange,
  // algebra
  DuplicateLabel,
  NonLattice,
  NonDistributive,
  BadNegation,
  // fuzzy
  CarrierMismatch,
  AlgebraMismatch,
  NotCoprime,
  // group
  NonAssociative,
  NoIdentity,
  NoInverse,
  NotSubgroup,
  NotNormal,
  NotAHomomorphism,
  // convex
  MissingConstant,
  NotMeetClosed,
  MixedCarriers,
  Mismatch,
  NotSurjective,
  EmptySubset,
  NotStratified,
  // convex groups
  NotAnSLCG,
  HypothesisFailed,
  AssertionFailed,
  // oracle / enumeration
  GuardExceeded,
  UnknownRecipe,
};

std::string_view to_string(ErrorKind kind);

/// Every library failure is reported through this type. `witness` carries a
/// JSON description of the offending tuple when one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, nlohmann::json witness = nullptr);

  ErrorKind kind() const noexcept { return kind_; }
  const nlohmann::json& witness() const noexcept { return witness_; }

  nlohmann::json to_json() const;

 private:
  ErrorKind kind_;
  nlohmann::json witness_;
};

}  // namespace slcg
