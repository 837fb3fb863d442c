#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "slcg/convex.hpp"
#include "slcg/functors.hpp"
#include "slcg/group.hpp"

// Brute-force references. Nothing here calls the optimized algorithms they are
// compared against; duplication with convex/functors is deliberate.

namespace slcg::oracle {

/// Calls `fn` on every L-fuzzy set in canonical order. Throws GuardExceeded
/// when |L|^|X| > guard.
void for_each_fuzzy_set(const CarrierPtr& carrier, const AlgebraPtr& algebra, std::uint64_t guard,
                        const std::function<void(const FuzzySet&)>& fn);
std::vector<FuzzySet> enumerate_fuzzy_sets(const CarrierPtr& carrier, const AlgebraPtr& algebra,
                                           std::uint64_t guard = kDefaultEnumGuard);

inline constexpr std::size_t kNaiveGenerateLimit = 20;

/// Meets of every non-empty subfamily of subbase plus constants.
/// Throws GuardExceeded past kNaiveGenerateLimit distinct seeds.
ConvexStructure naive_generate(const CarrierPtr& carrier, const AlgebraPtr& algebra,
                               const std::vector<FuzzySet>& subbase, bool stratified);

/// Every intersection-closed family containing the empty set and X, |X| <= 3.
std::vector<CrispConvexStructure> enumerate_crisp_structures(const CarrierPtr& carrier);
/// Join of every crisp convex-group structure C with omega(C) <= B, |X| <= 3.
CrispConvexStructure rho_by_enumeration(const FiniteGroup& group, const ConvexStructure& structure);

/// Preimage of every target member checked against the source member list.
bool naive_is_lcp(const CarrierMap& f, const ConvexStructure& source, const ConvexStructure& target);

/// Literal pair search: is `set` equal to B x C for some members B, C?
bool naive_in_square(const FiniteGroup& group, const ConvexStructure& structure, const FuzzySet& set);
/// m and r are LCP, with the square tested by naive_in_square.
bool naive_is_slcg(const FiniteGroup& group, const ConvexStructure& structure);
/// The convolution condition searched over all member pairs (B, C).
bool naive_odot_condition(const FiniteGroup& group, const ConvexStructure& structure);

struct NamedAlgebra {
  std::string name;
  AlgebraPtr algebra;
};
struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

/// chain2..chain5, cube2, chain2xchain3.
std::vector<NamedAlgebra> catalog_algebras();
/// Z1..Z6, V4, S3.
std::vector<NamedGroup> catalog_groups();

struct Instance {
  std::string recipe;
  std::string group_name;
  std::string algebra_name;
  FiniteGroup group;
  ConvexStructure structure;

  nlohmann::json describe() const;
};

/// indiscrete, random-subbase, omega-of-random-crisp, omega-of-random-crisp-cg,
/// discrete, join-of-random, mixed.
const std::vector<std::string>& recipe_names();

/// Deterministic in (recipe, seed, n). Throws UnknownRecipe.
std::vector<Instance> sample_instances(const std::string& recipe, std::uint64_t seed, std::size_t n);

}  // namespace slcg::oracle
