#include "slcg/fuzzy.hpp"

#include <algorithm>
#include <set>

#include "slcg/error.hpp"

namespace slcg {

Carrier::Carrier(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw Error(ErrorKind::EmptySubset, "carrier must be non-empty");
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) {
      throw Error(ErrorKind::DuplicateLabel, "duplicate carrier label '" + l + "'", {{"label", l}});
    }
  }
}

std::size_t Carrier::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw Error(ErrorKind::UnknownElement, "no carrier element labelled '" + label + "'",
                {{"label", label}});
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

CarrierPtr make_carrier(std::vector<std::string> labels) {
  return std::make_shared<const Carrier>(std::move(labels));
}

CarrierPtr numbered_carrier(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return make_carrier(std::move(labels));
}

CarrierPtr product_carrier(const CarrierPtr& lhs, const CarrierPtr& rhs) {
  std::vector<std::string> labels;
  labels.reserve(lhs->size() * rhs->size());
  for (const auto& a : lhs->labels()) {
    for (const auto& b : rhs->labels()) labels.push_back("(" + a + "," + b + ")");
  }
  return make_carrier(std::move(labels));
}

bool same_carrier(const CarrierPtr& lhs, const CarrierPtr& rhs) {
  if (lhs == rhs) return true;
  if (!lhs || !rhs) return false;
  return *lhs == *rhs;
}

FuzzySet::FuzzySet(CarrierPtr carrier, AlgebraPtr algebra, std::vector<AlgebraElement> values)
    : carrier_(std::move(carrier)), algebra_(std::move(algebra)), values_(std::move(values)) {
  if (values_.size() != carrier_->size()) {
    throw Error(ErrorKind::CarrierMismatch, "value vector length differs from carrier size",
                {{"values", values_.size()}, {"carrier", carrier_->size()}});
  }
  for (auto v : values_) {
    if (v >= algebra_->size()) {
      throw Error(ErrorKind::UnknownElement, "value index outside the algebra", {{"value", v}});
    }
  }
}

CarrierMap::CarrierMap(CarrierPtr source, CarrierPtr target, std::vector<std::size_t> table)
    : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {
  if (table_.size() != source_->size()) {
    throw Error(ErrorKind::CarrierMismatch, "map table is not total on its source",
                {{"table", table_.size()}, {"source", source_->size()}});
  }
  for (auto y : table_) {
    if (y >= target_->size()) {
      throw Error(ErrorKind::UnknownElement, "map value outside the target", {{"value", y}});
    }
  }
}

bool CarrierMap::is_surjective() const {
  std::vector<bool> hit(target_->size(), false);
  for (auto y : table_) hit[y] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool CarrierMap::is_injective() const {
  std::vector<bool> hit(target_->size(), false);
  for (auto y : table_) {
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

CarrierMap identity_map(const CarrierPtr& carrier) {
  std::vector<std::size_t> table(carrier->size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = i;
  return CarrierMap(carrier, carrier, std::move(table));
}

CarrierMap compose(const CarrierMap& outer, const CarrierMap& inner) {
  if (!same_carrier(inner.target(), outer.source())) {
    throw Error(ErrorKind::CarrierMismatch, "cannot compose: inner target differs from outer source");
  }
  std::vector<std::size_t> table(inner.source()->size());
  for (std::size_t x = 0; x < table.size(); ++x) table[x] = outer(inner(x));
  return CarrierMap(inner.source(), outer.target(), std::move(table));
}

CarrierMap product_map(const CarrierMap& f1, const CarrierMap& f2) {
  auto source = product_carrier(f1.source(), f2.source());
  auto target = product_carrier(f1.target(), f2.target());
  const std::size_t n2 = f2.source()->size();
  const std::size_t m2 = f2.target()->size();
  std::vector<std::size_t> table(source->size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = f1(i / n2) * m2 + f2(i % n2);
  return CarrierMap(source, target, std::move(table));
}

CarrierMap first_projection(const CarrierPtr& product, const CarrierPtr& lhs, const CarrierPtr& rhs) {
  std::vector<std::size_t> table(product->size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = i / rhs->size();
  return CarrierMap(product, lhs, std::move(table));
}

CarrierMap second_projection(const CarrierPtr& product, const CarrierPtr& /*lhs*/, const CarrierPtr& rhs) {
  std::vector<std::size_t> table(product->size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = i % rhs->size();
  return CarrierMap(product, rhs, std::move(table));
}

CarrierMap inclusion_map(const CarrierPtr& carrier, const std::vector<std::size_t>& subset) {
  if (subset.empty()) throw Error(ErrorKind::EmptySubset, "subspace needs a non-empty subset");
  if (!std::is_sorted(subset.begin(), subset.end()) ||
      std::adjacent_find(subset.begin(), subset.end()) != subset.end()) {
    throw Error(ErrorKind::SchemaError, "subset indices must be strictly ascending");
  }
  std::vector<std::string> labels;
  for (auto i : subset) labels.push_back(carrier->label(i));
  return CarrierMap(make_carrier(std::move(labels)), carrier, subset);
}

void require_compatible(const FuzzySet& lhs, const FuzzySet& rhs) {
  if (!same_carrier(lhs.carrier_ptr(), rhs.carrier_ptr())) {
    throw Error(ErrorKind::CarrierMismatch, "fuzzy sets live on different carriers");
  }
  if (!same_algebra(lhs.algebra_ptr(), rhs.algebra_ptr())) {
    throw Error(ErrorKind::AlgebraMismatch, "fuzzy sets take values in different algebras");
  }
}

FuzzySet pointwise_join(const FuzzySet& lhs, const FuzzySet& rhs) {
  require_compatible(lhs, rhs);
  const auto& L = lhs.algebra();
  std::vector<AlgebraElement> v(lhs.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = L.join(lhs[i], rhs[i]);
  return FuzzySet(lhs.carrier_ptr(), lhs.algebra_ptr(), std::move(v));
}

FuzzySet pointwise_meet(const FuzzySet& lhs, const FuzzySet& rhs) {
  require_compatible(lhs, rhs);
  const auto& L = lhs.algebra();
  std::vector<AlgebraElement> v(lhs.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = L.meet(lhs[i], rhs[i]);
  return FuzzySet(lhs.carrier_ptr(), lhs.algebra_ptr(), std::move(v));
}

FuzzySet complement(const FuzzySet& set) {
  const auto& L = set.algebra();
  std::vector<AlgebraElement> v(set.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = L.neg(set[i]);
  return FuzzySet(set.carrier_ptr(), set.algebra_ptr(), std::move(v));
}

bool leq(const FuzzySet& lhs, const FuzzySet& rhs) {
  require_compatible(lhs, rhs);
  const auto& L = lhs.algebra();
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (!L.leq(lhs[i], rhs[i])) return false;
  }
  return true;
}

FuzzySet constant(const CarrierPtr& carrier, const AlgebraPtr& algebra, AlgebraElement a) {
  return FuzzySet(carrier, algebra, std::vector<AlgebraElement>(carrier->size(), a));
}

FuzzySet characteristic(const CarrierPtr& carrier, const AlgebraPtr& algebra,
                        const std::vector<std::size_t>& subset) {
  std::vector<AlgebraElement> v(carrier->size(), algebra->bot());
  for (auto x : subset) {
    if (x >= carrier->size()) throw Error(ErrorKind::UnknownElement, "subset index outside carrier");
    v[x] = algebra->top();
  }
  return FuzzySet(carrier, algebra, std::move(v));
}

FuzzySet point(const CarrierPtr& carrier, const AlgebraPtr& algebra, std::size_t x, AlgebraElement a) {
  if (x >= carrier->size()) throw Error(ErrorKind::UnknownElement, "point outside carrier");
  if (a >= algebra->size()) throw Error(ErrorKind::UnknownElement, "value outside algebra");
  if (!algebra->is_coprime(a)) {
    throw Error(ErrorKind::NotCoprime, "point level must be a nonzero coprime element",
                {{"level", algebra->label(a)}});
  }
  std::vector<AlgebraElement> v(carrier->size(), algebra->bot());
  v[x] = a;
  return FuzzySet(carrier, algebra, std::move(v));
}

FuzzySet image(const CarrierMap& f, const FuzzySet& set) {
  if (!same_carrier(f.source(), set.carrier_ptr())) {
    throw Error(ErrorKind::CarrierMismatch, "image: set does not live on the map's source");
  }
  const auto& L = set.algebra();
  std::vector<AlgebraElement> v(f.target()->size(), L.bot());
  for (std::size_t x = 0; x < set.size(); ++x) v[f(x)] = L.join(v[f(x)], set[x]);
  return FuzzySet(f.target(), set.algebra_ptr(), std::move(v));
}

FuzzySet preimage(const CarrierMap& f, const FuzzySet& set) {
  if (!same_carrier(f.target(), set.carrier_ptr())) {
    throw Error(ErrorKind::CarrierMismatch, "preimage: set does not live on the map's target");
  }
  std::vector<AlgebraElement> v(f.source()->size());
  for (std::size_t x = 0; x < v.size(); ++x) v[x] = set[f(x)];
  return FuzzySet(f.source(), set.algebra_ptr(), std::move(v));
}

FuzzySet product_set(const FuzzySet& lhs, const FuzzySet& rhs) {
  return product_set(product_carrier(lhs.carrier_ptr(), rhs.carrier_ptr()), lhs, rhs);
}

FuzzySet product_set(const CarrierPtr& product, const FuzzySet& lhs, const FuzzySet& rhs) {
  if (!same_algebra(lhs.algebra_ptr(), rhs.algebra_ptr())) {
    throw Error(ErrorKind::AlgebraMismatch, "product of fuzzy sets over different algebras");
  }
  if (product->size() != lhs.size() * rhs.size()) {
    throw Error(ErrorKind::CarrierMismatch, "product carrier has the wrong size");
  }
  const auto& L = lhs.algebra();
  std::vector<AlgebraElement> v(product->size());
  const std::size_t n2 = rhs.size();
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    for (std::size_t j = 0; j < n2; ++j) v[i * n2 + j] = L.meet(lhs[i], rhs[j]);
  }
  return FuzzySet(product, lhs.algebra_ptr(), std::move(v));
}

AlgebraElement supremum(const FuzzySet& set) {
  const auto& L = set.algebra();
  AlgebraElement s = L.bot();
  for (auto v : set.values()) s = L.join(s, v);
  return s;
}

AlgebraElement infimum(const FuzzySet& set) {
  const auto& L = set.algebra();
  AlgebraElement s = L.top();
  for (auto v : set.values()) s = L.meet(s, v);
  return s;
}

}  // namespace slcg
