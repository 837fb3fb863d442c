#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "slcg/convex.hpp"
#include "slcg/group.hpp"

namespace slcg {

/// Outcome of one property check. `witness` is non-null exactly when the
/// property fails; (property, seed) reproduce the run.
struct CheckReport {
  std::string property;
  std::string claim;
  bool holds = true;
  nlohmann::json witness;
  std::uint64_t cases = 0;
  std::uint64_t seed = 0;
  nlohmann::json details;

  void fail(nlohmann::json w) {
    if (holds) {
      holds = false;
      witness = std::move(w);
    }
  }
  nlohmann::json to_json() const;
};

/// A group carrying a stratified structure, with the verdict of the SLCG
/// check attached. Non-SLCG pairs are representable on purpose.
struct ConvexGroup {
  FiniteGroup group;
  ConvexStructure structure;
  CheckReport verified;

  bool is_slcg() const noexcept { return verified.holds; }
};

ConvexGroup make_convex_group(FiniteGroup group, ConvexStructure structure);

/// m : (X x X, C x C) -> (X, C) and r : (X, C) -> (X, C) are both LCP.
CheckReport is_slcg(const FiniteGroup& group, const ConvexStructure& structure);
/// k : (X x X, C x C) -> (X, C) is LCP.
CheckReport is_slcg_via_k(const FiniteGroup& group, const ConvexStructure& structure);

/// A in R_{x_a} <=> T_{x^-1} . A in R_{e_a} <=> A . T_{x^-1} in R_{e_a}, for all
/// x, a in J(L) and A over members plus `extra_samples` seeded random sets.
/// Throws NotAnSLCG when the pair is not a convex group.
CheckReport check_localization(const FiniteGroup& group, const ConvexStructure& structure, std::uint64_t seed,
                               std::size_t extra_samples);

/// First (x, y, a, A) for which the convolution condition fails, or nullopt
/// when it holds for every quadruple with A over members.
std::optional<nlohmann::json> odot_condition_violation(const FiniteGroup& group, const ConvexStructure& structure);

/// The biconditional "SLCG iff convolution condition".
CheckReport check_odot_characterization(const FiniteGroup& group, const ConvexStructure& structure,
                                        std::uint64_t seed);

/// Every left/right translation is an LCP bijection with LCP inverse.
/// Throws NotAnSLCG when the pair is not a convex group.
CheckReport check_translations(const FiniteGroup& group, const ConvexStructure& structure);

// Group-level constructions. Each result is re-checked and an
// AssertionFailed error carrying the report is thrown if it is not an SLCG.

ConvexGroup initial_group_structure(const FiniteGroup& source, const AlgebraPtr& algebra,
                                    const std::vector<GroupHom>& homs, const std::vector<ConvexGroup>& targets);

/// Requires surjective homs (NotSurjective); after computing the final
/// structure checks each hom is complement L-convex-to-convex
/// (HypothesisFailed).
ConvexGroup final_group_structure(const FiniteGroup& target, const AlgebraPtr& algebra,
                                  const std::vector<GroupHom>& homs, const std::vector<ConvexGroup>& sources,
                                  std::uint64_t guard = kDefaultEnumGuard);

ConvexGroup product_group(const ConvexGroup& lhs, const ConvexGroup& rhs);
ConvexGroup join_group(const std::vector<ConvexGroup>& groups);
ConvexGroup subgroup_space(const ConvexGroup& group, const std::vector<std::size_t>& subgroup);

struct QuotientSpace {
  ConvexGroup space;
  GroupHom projection;
  CheckReport complement_ctc;
};

QuotientSpace quotient_group_space(const ConvexGroup& group, const std::vector<std::size_t>& normal,
                                   std::uint64_t guard = kDefaultEnumGuard);

}  // namespace slcg
