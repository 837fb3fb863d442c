#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "slcg/fuzzy.hpp"

namespace slcg {

/// A finite group given by its Cayley table. Identity and inverses are
/// derived from the table during validation, never read from input.
class FiniteGroup {
 public:
  const CarrierPtr& carrier() const noexcept { return carrier_; }
  /// Row-major X x X, shared by every map built from this group.
  const CarrierPtr& square() const noexcept { return square_; }
  std::size_t order() const noexcept { return carrier_->size(); }

  std::size_t mul(std::size_t a, std::size_t b) const noexcept { return mul_[a * n_ + b]; }
  std::size_t inv(std::size_t a) const noexcept { return inv_[a]; }
  std::size_t identity() const noexcept { return identity_; }

  std::vector<std::vector<int>> table() const;

  friend bool operator==(const FiniteGroup& lhs, const FiniteGroup& rhs) {
    return *lhs.carrier_ == *rhs.carrier_ && lhs.mul_ == rhs.mul_;
  }

 private:
  friend FiniteGroup validate_group(const std::vector<std::string>&, const std::vector<std::vector<int>>&);

  std::size_t n_ = 0;
  CarrierPtr carrier_;
  CarrierPtr square_;
  std::vector<std::size_t> mul_;
  std::vector<std::size_t> inv_;
  std::size_t identity_ = 0;
};

/// Throws MalformedTable, NoIdentity, NoInverse or NonAssociative (with witness).
FiniteGroup validate_group(const std::vector<std::string>& labels, const std::vector<std::vector<int>>& mul);

FiniteGroup cyclic_group(std::size_t n);
FiniteGroup klein_four();
/// Permutations of {0,1,2} in lexicographic order, composed right-to-left.
FiniteGroup symmetric_group3();
FiniteGroup direct_product(const FiniteGroup& lhs, const FiniteGroup& rhs);

std::size_t element_order(const FiniteGroup& group, std::size_t x);

/// A carrier map between groups that respects multiplication and inverses.
struct GroupHom {
  CarrierMap map;
  FiniteGroup source;
  FiniteGroup target;
};

/// Throws NotAHomomorphism with the failing pair.
GroupHom validate_hom(CarrierMap map, const FiniteGroup& source, const FiniteGroup& target);
GroupHom identity_hom(const FiniteGroup& group);

CarrierMap left_translation(const FiniteGroup& group, std::size_t x);
CarrierMap right_translation(const FiniteGroup& group, std::size_t x);
/// u -> (x, u), into the group's square carrier.
CarrierMap pair_with(const FiniteGroup& group, std::size_t x);

/// m : X x X -> X.
CarrierMap mul_map(const FiniteGroup& group);
/// r : X -> X, u -> u^-1.
CarrierMap inverse_map(const FiniteGroup& group);
/// k : X x X -> X, (x, y) -> x y^-1.
CarrierMap k_map(const FiniteGroup& group);

/// (A . B)(u) = join over xy = u of A(x) ^ B(y).
FuzzySet convolve(const FiniteGroup& group, const FuzzySet& lhs, const FuzzySet& rhs);
/// A^-1(u) = A(u^-1).
FuzzySet fuzzy_inverse(const FiniteGroup& group, const FuzzySet& set);

bool is_subgroup(const FiniteGroup& group, const std::vector<std::size_t>& subset);
bool is_normal_subgroup(const FiniteGroup& group, const std::vector<std::size_t>& subset);

struct SubgroupResult {
  FiniteGroup subgroup;
  GroupHom inclusion;
};

/// Throws NotSubgroup.
SubgroupResult make_subgroup(const FiniteGroup& group, const std::vector<std::size_t>& subset);

struct QuotientResult {
  FiniteGroup quotient;
  GroupHom projection;
};

/// Cosets ordered by least member index, labelled "{a,b,...}" with members in
/// declared order. Throws NotSubgroup or NotNormal.
QuotientResult quotient_group(const FiniteGroup& group, const std::vector<std::size_t>& normal);

}  // namespace slcg
