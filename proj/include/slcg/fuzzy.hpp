#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "slcg/algebra.hpp"

namespace slcg {

/// A finite non-empty set with distinct labels in a fixed declared order.
class Carrier {
 public:
  explicit Carrier(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::size_t index_of(const std::string& label) const;

  friend bool operator==(const Carrier&, const Carrier&) = default;

 private:
  std::vector<std::string> labels_;
};

using CarrierPtr = std::shared_ptr<const Carrier>;

CarrierPtr make_carrier(std::vector<std::string> labels);
/// Carrier {0, ..., n-1} labelled by decimal strings.
CarrierPtr numbered_carrier(std::size_t n);
/// Row-major pairs: (x1, x2) sits at x1 * |X2| + x2, labelled "(a,b)".
CarrierPtr product_carrier(const CarrierPtr& lhs, const CarrierPtr& rhs);
bool same_carrier(const CarrierPtr& lhs, const CarrierPtr& rhs);

/// An L-fuzzy set X -> L, stored as one algebra index per carrier element.
class FuzzySet {
 public:
  FuzzySet(CarrierPtr carrier, AlgebraPtr algebra, std::vector<AlgebraElement> values);

  const Carrier& carrier() const noexcept { return *carrier_; }
  const CarrierPtr& carrier_ptr() const noexcept { return carrier_; }
  const DeMorganAlgebra& algebra() const noexcept { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const noexcept { return algebra_; }

  std::size_t size() const noexcept { return values_.size(); }
  AlgebraElement operator[](std::size_t i) const noexcept { return values_[i]; }
  const std::vector<AlgebraElement>& values() const noexcept { return values_; }

  /// Value-vector equality; carriers and algebras are assumed compatible.
  friend bool operator==(const FuzzySet& lhs, const FuzzySet& rhs) { return lhs.values_ == rhs.values_; }
  /// Canonical order: lexicographic on value indices.
  friend std::strong_ordering operator<=>(const FuzzySet& lhs, const FuzzySet& rhs) {
    return lhs.values_ <=> rhs.values_;
  }

 private:
  CarrierPtr carrier_;
  AlgebraPtr algebra_;
  std::vector<AlgebraElement> values_;
};

/// A total function between finite carriers.
class CarrierMap {
 public:
  CarrierMap(CarrierPtr source, CarrierPtr target, std::vector<std::size_t> table);

  const CarrierPtr& source() const noexcept { return source_; }
  const CarrierPtr& target() const noexcept { return target_; }
  std::size_t operator()(std::size_t x) const noexcept { return table_[x]; }
  const std::vector<std::size_t>& table() const noexcept { return table_; }

  bool is_surjective() const;
  bool is_injective() const;

  friend bool operator==(const CarrierMap& lhs, const CarrierMap& rhs) {
    return same_carrier(lhs.source_, rhs.source_) && same_carrier(lhs.target_, rhs.target_) &&
           lhs.table_ == rhs.table_;
  }

 private:
  CarrierPtr source_;
  CarrierPtr target_;
  std::vector<std::size_t> table_;
};

CarrierMap identity_map(const CarrierPtr& carrier);
/// outer after inner.
CarrierMap compose(const CarrierMap& outer, const CarrierMap& inner);
/// (x1, x2) -> (f1(x1), f2(x2)) on row-major product carriers.
CarrierMap product_map(const CarrierMap& f1, const CarrierMap& f2);
CarrierMap first_projection(const CarrierPtr& product, const CarrierPtr& lhs, const CarrierPtr& rhs);
CarrierMap second_projection(const CarrierPtr& product, const CarrierPtr& lhs, const CarrierPtr& rhs);
/// Inclusion of the subset (indices in ascending order) as its own carrier.
CarrierMap inclusion_map(const CarrierPtr& carrier, const std::vector<std::size_t>& subset);

// Pointwise calculus. Binary operations require the same carrier and algebra.
FuzzySet pointwise_join(const FuzzySet& lhs, const FuzzySet& rhs);
FuzzySet pointwise_meet(const FuzzySet& lhs, const FuzzySet& rhs);
FuzzySet complement(const FuzzySet& set);
bool leq(const FuzzySet& lhs, const FuzzySet& rhs);

FuzzySet constant(const CarrierPtr& carrier, const AlgebraPtr& algebra, AlgebraElement a);
FuzzySet characteristic(const CarrierPtr& carrier, const AlgebraPtr& algebra,
                        const std::vector<std::size_t>& subset);
/// x_a: value a at x, bottom elsewhere. Requires a in J(L).
FuzzySet point(const CarrierPtr& carrier, const AlgebraPtr& algebra, std::size_t x, AlgebraElement a);

/// f->(B)(y) = join of B over the fiber of y; an empty fiber gives bottom.
FuzzySet image(const CarrierMap& f, const FuzzySet& set);
/// f<-(A) = A o f.
FuzzySet preimage(const CarrierMap& f, const FuzzySet& set);
/// (A x B)(x1, x2) = A(x1) ^ B(x2) on the row-major product carrier.
FuzzySet product_set(const FuzzySet& lhs, const FuzzySet& rhs);
FuzzySet product_set(const CarrierPtr& product, const FuzzySet& lhs, const FuzzySet& rhs);

/// Join and meet of all values.
AlgebraElement supremum(const FuzzySet& set);
AlgebraElement infimum(const FuzzySet& set);

void require_compatible(const FuzzySet& lhs, const FuzzySet& rhs);

}  // namespace slcg
