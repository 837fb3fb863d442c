#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "slcg/error.hpp"
#include "slcg/fuzzy.hpp"

namespace slcg {

/// Default bound on |L|^|X| for anything that enumerates L^X.
inline constexpr std::uint64_t kDefaultEnumGuard = std::uint64_t{1} << 20;

/// |L|^|X|, saturating at UINT64_MAX.
std::uint64_t fuzzy_powerset_size(std::size_t algebra_size, std::size_t carrier_size);
/// Throws GuardExceeded when |L|^|X| > guard.
void require_enumerable(std::size_t algebra_size, std::size_t carrier_size, std::uint64_t guard);

/// A (stratified) L-convex structure on a finite carrier.
///
/// Over a finite carrier with a finite L every directed subfamily has a
/// maximum, so directed-join closure holds for any family; a structure is
/// therefore exactly a family containing bot^ and top^ (every a^ when
/// stratified) that is closed under binary meets. Members are kept sorted in
/// canonical order without duplicates.
class ConvexStructure {
 public:
  const CarrierPtr& carrier_ptr() const noexcept { return carrier_; }
  const Carrier& carrier() const noexcept { return *carrier_; }
  const AlgebraPtr& algebra_ptr() const noexcept { return algebra_; }
  const DeMorganAlgebra& algebra() const noexcept { return *algebra_; }
  bool stratified() const noexcept { return stratified_; }

  const std::vector<FuzzySet>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(const FuzzySet& set) const;
  bool contains(const std::vector<AlgebraElement>& values) const;

  /// Stops at the first member for which `pred` returns true.
  bool any_member(const std::function<bool(const FuzzySet&)>& pred) const;

  friend bool operator==(const ConvexStructure& lhs, const ConvexStructure& rhs) {
    return same_carrier(lhs.carrier_, rhs.carrier_) && lhs.members_ == rhs.members_;
  }

 private:
  friend ConvexStructure make_canonical_structure(CarrierPtr, AlgebraPtr, std::vector<FuzzySet>, bool);

  CarrierPtr carrier_;
  AlgebraPtr algebra_;
  bool stratified_ = false;
  std::vector<FuzzySet> members_;
};

/// Builds from a family already known to satisfy the axioms (sorts and
/// deduplicates, checks nothing else). Internal constructions use it after
/// closure; external input goes through validate_structure.
ConvexStructure make_canonical_structure(CarrierPtr carrier, AlgebraPtr algebra, std::vector<FuzzySet> family,
                                         bool stratified);

/// Throws MissingConstant(a), NotMeetClosed(pair) or MixedCarriers.
ConvexStructure validate_structure(const CarrierPtr& carrier, const AlgebraPtr& algebra,
                                   const std::vector<FuzzySet>& family, bool stratified);

/// Seeds bot^, top^ (all a^ when stratified) and the subbase, then closes
/// under binary meets.
ConvexStructure generate(const CarrierPtr& carrier, const AlgebraPtr& algebra, const std::vector<FuzzySet>& subbase,
                         bool stratified);

/// All meets of non-empty subfamilies, in canonical order.
std::vector<FuzzySet> base_of(const std::vector<FuzzySet>& subbase);

/// Structure generated by the union of the members. Throws Mismatch on
/// differing carriers, algebras or stratification, or an empty list.
ConvexStructure join_structures(const std::vector<ConvexStructure>& structures);

/// The family C1 x C2 = { A x B } on the row-major product carrier, without
/// materializing it. Membership is decided by searching pairs whose factors
/// dominate the candidate's projections.
class RectangleFamily {
 public:
  RectangleFamily(const ConvexStructure& lhs, const ConvexStructure& rhs);
  RectangleFamily(const ConvexStructure& lhs, const ConvexStructure& rhs, CarrierPtr product);

  const CarrierPtr& carrier_ptr() const noexcept { return product_; }
  const AlgebraPtr& algebra_ptr() const noexcept { return lhs_->algebra_ptr(); }
  const ConvexStructure& lhs() const noexcept { return *lhs_; }
  const ConvexStructure& rhs() const noexcept { return *rhs_; }

  /// A pair (B, C) of members with B x C == set, if one exists.
  std::optional<std::pair<FuzzySet, FuzzySet>> factor(const FuzzySet& set) const;
  bool contains(const FuzzySet& set) const { return factor(set).has_value(); }
  bool any_member(const std::function<bool(const FuzzySet&)>& pred) const;

 private:
  const ConvexStructure* lhs_;
  const ConvexStructure* rhs_;
  CarrierPtr product_;
};

/// x_a <= C' <= A' for some member C. Throws NotCoprime when a is not in J(L).
template <class Family>
bool in_remote_nbhd(const Family& family, std::size_t x, AlgebraElement a, const FuzzySet& set);

/// First member G of the target whose preimage escapes the source family.
template <class Family>
std::optional<FuzzySet> lcp_violation(const CarrierMap& f, const Family& source, const ConvexStructure& target);

template <class Family>
bool is_lcp(const CarrierMap& f, const Family& source, const ConvexStructure& target) {
  return !lcp_violation(f, source, target).has_value();
}

/// The remote-neighborhood form of LCP: for every x, a in J(L) and A ranging
/// over the target's members plus `extra`, A in R_{f(x)_a} implies
/// f<-(A) in R_{x_a}. Returns the first failing (x, a, A) as JSON.
template <class Family>
std::optional<nlohmann::json> remote_lcp_violation(const CarrierMap& f, const Family& source,
                                                   const ConvexStructure& target,
                                                   const std::vector<FuzzySet>& extra = {});

template <class Family>
bool is_lcp_via_remote(const CarrierMap& f, const Family& source, const ConvexStructure& target,
                       const std::vector<FuzzySet>& extra = {}) {
  return !remote_lcp_violation(f, source, target, extra).has_value();
}

/// Finite form of LCB1-3: contains bot^ and every a^, and is meet-closed.
bool is_base_check(const CarrierPtr& carrier, const AlgebraPtr& algebra, const std::vector<FuzzySet>& family);
/// Finite form of LCSB1-2: non-empty, meet of all members is bot^, and every
/// non-bottom a^ is a meet of a (possibly empty) subfamily.
bool is_subbase_check(const CarrierPtr& carrier, const AlgebraPtr& algebra, const std::vector<FuzzySet>& family);

/// { B x C | B in lhs, C in rhs } on the row-major product carrier.
ConvexStructure product_structure(const ConvexStructure& lhs, const ConvexStructure& rhs);

/// Structure generated by all preimages f_j<-(C), C in targets[j].
ConvexStructure initial_structure(const CarrierPtr& source, const AlgebraPtr& algebra,
                                  const std::vector<CarrierMap>& maps,
                                  const std::vector<ConvexStructure>& targets, bool stratified = true);

/// { C in L^X | f_j<-(C) in sources[j] for all j }, by enumeration of L^X.
ConvexStructure final_structure(const CarrierPtr& target, const AlgebraPtr& algebra,
                                const std::vector<CarrierMap>& maps,
                                const std::vector<ConvexStructure>& sources,
                                std::uint64_t guard = kDefaultEnumGuard);

ConvexStructure subspace(const ConvexStructure& structure, const std::vector<std::size_t>& subset);
ConvexStructure quotient(const ConvexStructure& structure, const CarrierMap& q,
                         std::uint64_t guard = kDefaultEnumGuard);

/// [f->(B')]' is a member of `target` for every member B of `source`.
bool is_complement_ctc(const CarrierMap& f, const ConvexStructure& source, const ConvexStructure& target);
std::optional<FuzzySet> complement_ctc_violation(const CarrierMap& f, const ConvexStructure& source,
                                                 const ConvexStructure& target);

/// Labels of a fuzzy set's values in carrier order; used in witnesses.
nlohmann::json value_labels(const FuzzySet& set);

// ---------------------------------------------------------------------------

template <class Family>
bool in_remote_nbhd(const Family& family, std::size_t x, AlgebraElement a, const FuzzySet& set) {
  const auto& L = set.algebra();
  if (a >= L.size() || !L.is_coprime(a)) {
    throw Error(ErrorKind::NotCoprime, "remote neighborhoods are indexed by coprime levels",
                {{"level", a < L.size() ? L.label(a) : std::to_string(a)}});
  }
  if (x >= set.size()) throw Error(ErrorKind::UnknownElement, "point outside carrier");
  return family.any_member([&](const FuzzySet& c) {
    if (!L.leq(a, L.neg(c[x]))) return false;
    for (std::size_t z = 0; z < set.size(); ++z) {
      if (!L.leq(L.neg(c[z]), L.neg(set[z]))) return false;
    }
    return true;
  });
}

template <class Family>
std::optional<FuzzySet> lcp_violation(const CarrierMap& f, const Family& source, const ConvexStructure& target) {
  if (!same_carrier(f.source(), source.carrier_ptr()) || !same_carrier(f.target(), target.carrier_ptr())) {
    throw Error(ErrorKind::CarrierMismatch, "map does not run between the given structures");
  }
  for (const auto& member : target.members()) {
    if (!source.contains(preimage(f, member))) return member;
  }
  return std::nullopt;
}

template <class Family>
std::optional<nlohmann::json> remote_lcp_violation(const CarrierMap& f, const Family& source,
                                                   const ConvexStructure& target,
                                                   const std::vector<FuzzySet>& extra) {
  if (!same_carrier(f.source(), source.carrier_ptr()) || !same_carrier(f.target(), target.carrier_ptr())) {
    throw Error(ErrorKind::CarrierMismatch, "map does not run between the given structures");
  }
  const auto& L = target.algebra();
  auto check = [&](const FuzzySet& a_set) -> std::optional<nlohmann::json> {
    const auto pulled = preimage(f, a_set);
    for (std::size_t x = 0; x < f.source()->size(); ++x) {
      for (auto a : L.coprime_elements()) {
        if (in_remote_nbhd(target, f(x), a, a_set) && !in_remote_nbhd(source, x, a, pulled)) {
          return nlohmann::json{{"x", f.source()->label(x)}, {"level", L.label(a)}, {"A", value_labels(a_set)}};
        }
      }
    }
    return std::nullopt;
  };
  for (const auto& member : target.members()) {
    if (auto w = check(member)) return w;
  }
  for (const auto& sample : extra) {
    if (auto w = check(sample)) return w;
  }
  return std::nullopt;
}

}  // namespace slcg
