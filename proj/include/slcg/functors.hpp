#pragma once

#include <cstdint>
#include <vector>

#include "slcg/convex.hpp"
#include "slcg/convex_group.hpp"

namespace slcg {

/// A crisp subset as a bit mask: bit x is set iff x is in the subset.
using CrispSet = std::uint64_t;

/// Largest carrier whose subsets fit a mask, and largest group whose square does.
inline constexpr std::size_t kMaxCrispCarrier = 64;
inline constexpr std::size_t kMaxCrispGroup = 8;

CrispSet full_set(std::size_t n);
std::vector<std::size_t> elements_of(CrispSet set);
/// Canonical order on masks: lexicographic on membership vectors, element 0 first.
bool crisp_less(CrispSet lhs, CrispSet rhs);

/// A convex structure on a finite carrier: contains the empty set and the
/// carrier and is closed under binary intersection.
class CrispConvexStructure {
 public:
  const CarrierPtr& carrier_ptr() const noexcept { return carrier_; }
  const Carrier& carrier() const noexcept { return *carrier_; }
  const std::vector<CrispSet>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(CrispSet set) const;

  friend bool operator==(const CrispConvexStructure& lhs, const CrispConvexStructure& rhs) {
    return same_carrier(lhs.carrier_, rhs.carrier_) && lhs.members_ == rhs.members_;
  }

 private:
  friend CrispConvexStructure make_canonical_crisp(CarrierPtr, std::vector<CrispSet>);

  CarrierPtr carrier_;
  std::vector<CrispSet> members_;
};

/// Sorts and deduplicates only.
CrispConvexStructure make_canonical_crisp(CarrierPtr carrier, std::vector<CrispSet> family);
/// Throws SizeOutOfRange, MissingConstant or NotMeetClosed.
CrispConvexStructure validate_crisp_structure(const CarrierPtr& carrier, const std::vector<CrispSet>& family);
CrispConvexStructure crisp_generate(const CarrierPtr& carrier, const std::vector<CrispSet>& subbase);
CrispConvexStructure crisp_join(const std::vector<CrispConvexStructure>& structures);
CrispConvexStructure crisp_initial(const CarrierPtr& source, const std::vector<CarrierMap>& maps,
                                   const std::vector<CrispConvexStructure>& targets);

CrispSet crisp_preimage(const CarrierMap& f, CrispSet set);
bool is_cp(const CarrierMap& f, const CrispConvexStructure& source, const CrispConvexStructure& target);
/// m and r are CP, with the crisp product taken as the rectangle family.
CheckReport is_cg(const FiniteGroup& group, const CrispConvexStructure& structure);

/// The L = 2 identification: subsets as characteristic maps into the 2-chain.
ConvexStructure to_fuzzy(const CrispConvexStructure& structure);
/// Throws AlgebraMismatch unless the algebra has two elements.
CrispConvexStructure to_crisp(const ConvexStructure& structure);

/// { a^ ^ T_C | a in L, C in the structure }. Asserted equal to the structure it generates.
ConvexStructure omega(const CrispConvexStructure& structure, const AlgebraPtr& algebra);

/// Largest convex-group structure contained in a family of subsets, by
/// removing sets whose r- or m-preimage leaves the family until stable.
CrispConvexStructure largest_cg_within(const FiniteGroup& group, const CarrierPtr& carrier,
                                       std::vector<CrispSet> family);

/// The reflector on a stratified structure over the group's carrier.
/// Throws NotStratified, Mismatch or GuardExceeded (|X| > 8).
CrispConvexStructure rho(const FiniteGroup& group, const ConvexStructure& structure);

/// omega(rho(B)) <= B, rho(omega(rho(B))) = rho(B), and the hom-set
/// correspondence over endomorphisms of the group.
CheckReport check_adjunction(const FiniteGroup& group, const ConvexStructure& structure);
/// rho(omega(C)) = C for a crisp convex group.
CheckReport check_left_inverse(const FiniteGroup& group, const CrispConvexStructure& structure,
                               const AlgebraPtr& algebra);
/// omega of crisp initial structures and joins against the fuzzy constructions
/// on omega-images, on seeded random crisp instances.
CheckReport check_omega_preserves(std::uint64_t seed, std::size_t cases, const AlgebraPtr& algebra);
CheckReport cp_iff_lcp_under_omega(const CarrierMap& f, const CrispConvexStructure& source,
                                   const CrispConvexStructure& target, const AlgebraPtr& algebra);

/// Subset labels, sorted by carrier order, for witnesses and serialization.
nlohmann::json crisp_labels(const Carrier& carrier, CrispSet set);

}  // namespace slcg
