#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace slcg {

/// Index of an element in its algebra's declared label order.
using AlgebraElement = std::uint8_t;

/// Upper bound on algebra size imposed by the element index width.
inline constexpr std::size_t kMaxAlgebraSize = 255;

/// Unvalidated algebra description, as read from a file or assembled by a
/// builder. Tables are indexed by declared label order.
struct RawAlgebra {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> meet;
  std::vector<std::vector<int>> join;
  std::vector<int> neg;
  int top = -1;
  int bot = -1;
};

/// A finite distributive lattice with an order-reversing involution. Finite
/// distributive lattices are completely distributive, so the validator only
/// checks binary distributivity.
///
/// Instances are immutable and only obtainable through validate_algebra (or
/// the builders, which call it).
class DeMorganAlgebra {
 public:
  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(AlgebraElement a) const { return labels_.at(a); }
  AlgebraElement index_of(const std::string& label) const;

  AlgebraElement meet(AlgebraElement a, AlgebraElement b) const noexcept { return meet_[a * n_ + b]; }
  AlgebraElement join(AlgebraElement a, AlgebraElement b) const noexcept { return join_[a * n_ + b]; }
  AlgebraElement neg(AlgebraElement a) const noexcept { return neg_[a]; }
  bool leq(AlgebraElement a, AlgebraElement b) const noexcept { return meet(a, b) == a; }
  AlgebraElement top() const noexcept { return top_; }
  AlgebraElement bot() const noexcept { return bot_; }

  /// Nonzero coprime elements J(L), ascending by index.
  const std::vector<AlgebraElement>& coprime_elements() const noexcept { return coprimes_; }
  bool is_coprime(AlgebraElement a) const noexcept { return is_coprime_[a] != 0; }

  RawAlgebra raw() const;

  friend bool operator==(const DeMorganAlgebra& lhs, const DeMorganAlgebra& rhs);

 private:
  friend std::shared_ptr<const DeMorganAlgebra> validate_algebra(const RawAlgebra& raw);
  DeMorganAlgebra() = default;

  std::size_t n_ = 0;
  std::vector<std::string> labels_;
  std::vector<AlgebraElement> meet_;
  std::vector<AlgebraElement> join_;
  std::vector<AlgebraElement> neg_;
  AlgebraElement top_ = 0;
  AlgebraElement bot_ = 0;
  std::vector<AlgebraElement> coprimes_;
  std::vector<std::uint8_t> is_coprime_;
};

using AlgebraPtr = std::shared_ptr<const DeMorganAlgebra>;

/// Pointer identity first, then structural equality.
bool same_algebra(const AlgebraPtr& lhs, const AlgebraPtr& rhs);

/// One violated law with the tuple that witnesses it.
struct AlgebraViolation {
  std::string kind;  // ErrorKind name
  std::string law;
  std::vector<int> witness;
};

/// Every violated law (first witness per law) of a raw description. Empty
/// when the description is a valid De Morgan algebra.
std::vector<AlgebraViolation> check_algebra(const RawAlgebra& raw);

/// Validates and freezes an algebra. Throws Error whose kind is the first
/// violation's kind and whose witness lists every violation.
AlgebraPtr validate_algebra(const RawAlgebra& raw);

/// { a != bot | a <= b v c implies a <= b or a <= c }, by exhaustive triple check.
std::vector<AlgebraElement> coprimes(const DeMorganAlgebra& algebra);

/// Totally ordered algebra 0 < ... < n-1 with neg(i) = n-1-i.
AlgebraPtr chain(std::size_t n);
/// Powerset of k atoms with complement; element index is the atom bitmask.
AlgebraPtr boolean_cube(std::size_t k);
/// Componentwise product, element (i, j) at index i * |rhs| + j.
AlgebraPtr product(const DeMorganAlgebra& lhs, const DeMorganAlgebra& rhs);

}  // namespace slcg
