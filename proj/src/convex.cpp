#include "slcg/convex.hpp"

#include <algorithm>
#include <set>

#include "slcg/error.hpp"

namespace slcg {

namespace {

using Values = std::vector<AlgebraElement>;

constexpr std::size_t kProductCrossCheckLimit = 1024;

void require_family(const CarrierPtr& carrier, const AlgebraPtr& algebra, const std::vector<FuzzySet>& family) {
  for (const auto& s : family) {
    if (!same_carrier(s.carrier_ptr(), carrier)) {
      throw Error(ErrorKind::MixedCarriers, "family member lives on a different carrier");
    }
    if (!same_algebra(s.algebra_ptr(), algebra)) {
      throw Error(ErrorKind::MixedCarriers, "family member takes values in a different algebra");
    }
  }
}

Values meet_values(const DeMorganAlgebra& L, const Values& a, const Values& b) {
  Values out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = L.meet(a[i], b[i]);
  return out;
}

// Closes `seeds` under binary meets. Returns the closure in canonical order.
std::vector<Values> meet_closure(const DeMorganAlgebra& L, std::vector<Values> seeds) {
  std::set<Values> seen;
  std::vector<Values> list;
  for (auto& s : seeds) {
    if (seen.insert(s).second) list.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      auto m = meet_values(L, list[i], list[j]);
      if (seen.insert(m).second) list.push_back(std::move(m));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<FuzzySet> wrap(const CarrierPtr& carrier, const AlgebraPtr& algebra, std::vector<Values> rows) {
  std::vector<FuzzySet> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.emplace_back(carrier, algebra, std::move(r));
  return out;
}

std::vector<Values> required_constants(const Carrier& carrier, const DeMorganAlgebra& L, bool stratified) {
  std::vector<Values> out;
  if (stratified) {
    for (std::size_t a = 0; a < L.size(); ++a) out.emplace_back(carrier.size(), static_cast<AlgebraElement>(a));
  } else {
    out.emplace_back(carrier.size(), L.bot());
    out.emplace_back(carrier.size(), L.top());
  }
  return out;
}

}  // namespace

std::uint64_t fuzzy_powerset_size(std::size_t algebra_size, std::size_t carrier_size) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < carrier_size; ++i) {
    if (total > UINT64_MAX / algebra_size) return UINT64_MAX;
    total *= algebra_size;
  }
  return total;
}

void require_enumerable(std::size_t algebra_size, std::size_t carrier_size, std::uint64_t guard) {
  const auto total = fuzzy_powerset_size(algebra_size, carrier_size);
  if (total > guard) {
    throw Error(ErrorKind::GuardExceeded, "|L|^|X| exceeds the enumeration guard",
                {{"size", total}, {"guard", guard}, {"algebra", algebra_size}, {"carrier", carrier_size}});
  }
}

nlohmann::json value_labels(const FuzzySet& set) {
  auto out = nlohmann::json::array();
  for (auto v : set.values()) out.push_back(set.algebra().label(v));
  return out;
}

bool ConvexStructure::contains(const FuzzySet& set) const { return contains(set.values()); }

bool ConvexStructure::contains(const std::vector<AlgebraElement>& values) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), values,
                             [](const FuzzySet& m, const Values& v) { return m.values() < v; });
  return it != members_.end() && it->values() == values;
}

bool ConvexStructure::any_member(const std::function<bool(const FuzzySet&)>& pred) const {
  return std::any_of(members_.begin(), members_.end(), pred);
}

ConvexStructure make_canonical_structure(CarrierPtr carrier, AlgebraPtr algebra, std::vector<FuzzySet> family,
                                         bool stratified) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  ConvexStructure s;
  s.carrier_ = std::move(carrier);
  s.algebra_ = std::move(algebra);
  s.stratified_ = stratified;
  s.members_ = std::move(family);
  return s;
}

ConvexStructure validate_structure(const CarrierPtr& carrier, const AlgebraPtr& algebra,
                                   const std::vector<FuzzySet>& family, bool stratified) {
  require_family(carrier, algebra, family);
  auto s = make_canonical_structure(carrier, algebra, family, stratified);
  const auto& L = *algebra;
  for (const auto& c : required_constants(*carrier, L, stratified)) {
    if (!s.contains(c)) {
      throw Error(ErrorKind::MissingConstant, "structure lacks the constant " + L.label(c.front()),
                  {{"constant", L.label(c.front())}});
    }
  }
  const auto& m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (!s.contains(meet_values(L, m[i].values(), m[j].values()))) {
        throw Error(ErrorKind::NotMeetClosed, "meet of two members is not a member",
                    {{"lhs", value_labels(m[i])}, {"rhs", value_labels(m[j])}});
      }
    }
  }
  return s;
}

ConvexStructure generate(const CarrierPtr& carrier, const AlgebraPtr& algebra, const std::vector<FuzzySet>& subbase,
                         bool stratified) {
  require_family(carrier, algebra, subbase);
  auto seeds = required_constants(*carrier, *algebra, stratified);
  for (const auto& s : subbase) seeds.push_back(s.values());
  auto closed = meet_closure(*algebra, std::move(seeds));
  return make_canonical_structure(carrier, algebra, wrap(carrier, algebra, std::move(closed)), stratified);
}

std::vector<FuzzySet> base_of(const std::vector<FuzzySet>& subbase) {
  if (subbase.empty()) return {};
  const auto& carrier = subbase.front().carrier_ptr();
  const auto& algebra = subbase.front().algebra_ptr();
  require_family(carrier, algebra, subbase);
  std::vector<Values> seeds;
  for (const auto& s : subbase) seeds.push_back(s.values());
  return wrap(carrier, algebra, meet_closure(*algebra, std::move(seeds)));
}

ConvexStructure join_structures(const std::vector<ConvexStructure>& structures) {
  if (structures.empty()) throw Error(ErrorKind::Mismatch, "join of an empty list of structures");
  const auto& first = structures.front();
  std::vector<FuzzySet> all;
  for (const auto& s : structures) {
    if (!same_carrier(s.carrier_ptr(), first.carrier_ptr()) || !same_algebra(s.algebra_ptr(), first.algebra_ptr()) ||
        s.stratified() != first.stratified()) {
      throw Error(ErrorKind::Mismatch, "joined structures differ in carrier, algebra or stratification");
    }
    all.insert(all.end(), s.members().begin(), s.members().end());
  }
  return generate(first.carrier_ptr(), first.algebra_ptr(), all, first.stratified());
}

RectangleFamily::RectangleFamily(const ConvexStructure& lhs, const ConvexStructure& rhs)
    : RectangleFamily(lhs, rhs, product_carrier(lhs.carrier_ptr(), rhs.carrier_ptr())) {}

RectangleFamily::RectangleFamily(const ConvexStructure& lhs, const ConvexStructure& rhs, CarrierPtr product)
    : lhs_(&lhs), rhs_(&rhs), product_(std::move(product)) {
  if (!same_algebra(lhs.algebra_ptr(), rhs.algebra_ptr())) {
    throw Error(ErrorKind::AlgebraMismatch, "product of structures over different algebras");
  }
  if (product_->size() != lhs.carrier().size() * rhs.carrier().size()) {
    throw Error(ErrorKind::CarrierMismatch, "product carrier has the wrong size");
  }
}

std::optional<std::pair<FuzzySet, FuzzySet>> RectangleFamily::factor(const FuzzySet& set) const {
  if (!same_carrier(set.carrier_ptr(), product_)) {
    throw Error(ErrorKind::CarrierMismatch, "candidate does not live on the product carrier");
  }
  const auto& L = lhs_->algebra();
  const std::size_t n1 = lhs_->carrier().size();
  const std::size_t n2 = rhs_->carrier().size();
  // Projections; a factor must dominate the projection onto its side.
  Values p1(n1, L.bot());
  Values p2(n2, L.bot());
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n2; ++j) {
      p1[i] = L.join(p1[i], set[i * n2 + j]);
      p2[j] = L.join(p2[j], set[i * n2 + j]);
    }
  }
  auto dominating = [&L](const ConvexStructure& s, const Values& p) {
    std::vector<const FuzzySet*> out;
    for (const auto& m : s.members()) {
      bool ok = true;
      for (std::size_t i = 0; i < p.size() && ok; ++i) ok = L.leq(p[i], m[i]);
      if (ok) out.push_back(&m);
    }
    return out;
  };
  const auto c1 = dominating(*lhs_, p1);
  const auto c2 = dominating(*rhs_, p2);
  for (const auto* b : c1) {
    for (const auto* c : c2) {
      bool equal = true;
      for (std::size_t i = 0; i < n1 && equal; ++i) {
        for (std::size_t j = 0; j < n2 && equal; ++j) equal = L.meet((*b)[i], (*c)[j]) == set[i * n2 + j];
      }
      if (equal) return std::make_pair(*b, *c);
    }
  }
  return std::nullopt;
}

bool RectangleFamily::any_member(const std::function<bool(const FuzzySet&)>& pred) const {
  for (const auto& b : lhs_->members()) {
    for (const auto& c : rhs_->members()) {
      if (pred(product_set(product_, b, c))) return true;
    }
  }
  return false;
}

bool is_base_check(const CarrierPtr& carrier, const AlgebraPtr& algebra, const std::vector<FuzzySet>& family) {
  require_family(carrier, algebra, family);
  std::set<Values> members;
  for (const auto& s : family) members.insert(s.values());
  for (const auto& c : required_constants(*carrier, *algebra, true)) {
    if (!members.count(c)) return false;
  }
  for (auto i = members.begin(); i != members.end(); ++i) {
    for (auto j = std::next(i); j != members.end(); ++j) {
      if (!members.count(meet_values(*algebra, *i, *j))) return false;
    }
  }
  return true;
}

bool is_subbase_check(const CarrierPtr& carrier, const AlgebraPtr& algebra, const std::vector<FuzzySet>& family) {
  require_family(carrier, algebra, family);
  if (family.empty()) return false;
  const auto& L = *algebra;
  Values all(carrier->size(), L.top());
  for (const auto& s : family) all = meet_values(L, all, s.values());
  if (all != Values(carrier->size(), L.bot())) return false;
  std::set<Values> base;
  for (const auto& b : base_of(family)) base.insert(b.values());
  base.insert(Values(carrier->size(), L.top()));  // empty meet
  for (std::size_t a = 0; a < L.size(); ++a) {
    if (a == L.bot()) continue;
    if (!base.count(Values(carrier->size(), static_cast<AlgebraElement>(a)))) return false;
  }
  return true;
}

ConvexStructure initial_structure(const CarrierPtr& source, const AlgebraPtr& algebra,
                                  const std::vector<CarrierMap>& maps,
                                  const std::vector<ConvexStructure>& targets, bool stratified) {
  if (maps.size() != targets.size()) throw Error(ErrorKind::Mismatch, "one target structure per map required");
  std::vector<FuzzySet> subbase;
  for (std::size_t j = 0; j < maps.size(); ++j) {
    if (!same_carrier(maps[j].source(), source)) {
      throw Error(ErrorKind::Mismatch, "source maps must share the source carrier", {{"map", j}});
    }
    if (!same_carrier(maps[j].target(), targets[j].carrier_ptr())) {
      throw Error(ErrorKind::Mismatch, "map target differs from its structure's carrier", {{"map", j}});
    }
    if (!same_algebra(targets[j].algebra_ptr(), algebra)) {
      throw Error(ErrorKind::Mismatch, "target structure uses a different algebra", {{"map", j}});
    }
    for (const auto& member : targets[j].members()) subbase.push_back(preimage(maps[j], member));
  }
  return generate(source, algebra, subbase, stratified);
}

ConvexStructure product_structure(const ConvexStructure& lhs, const ConvexStructure& rhs) {
  RectangleFamily rect(lhs, rhs);
  std::set<Values> seen;
  std::vector<FuzzySet> family;
  for (const auto& b : lhs.members()) {
    for (const auto& c : rhs.members()) {
      auto p = product_set(rect.carrier_ptr(), b, c);
      if (seen.insert(p.values()).second) family.push_back(std::move(p));
    }
  }
  const bool stratified = lhs.stratified() && rhs.stratified();
  auto out = make_canonical_structure(rect.carrier_ptr(), lhs.algebra_ptr(), std::move(family), stratified);
  if (lhs.size() * rhs.size() <= kProductCrossCheckLimit) {
    const auto& X = rect.carrier_ptr();
    auto init = initial_structure(X, lhs.algebra_ptr(),
                                  {first_projection(X, lhs.carrier_ptr(), rhs.carrier_ptr()),
                                   second_projection(X, lhs.carrier_ptr(), rhs.carrier_ptr())},
                                  {lhs, rhs}, stratified);
    if (!(init == out)) {
      throw Error(ErrorKind::AssertionFailed, "rectangle family differs from the initial structure of projections",
                  {{"rectangles", out.size()}, {"initial", init.size()}});
    }
  }
  return out;
}

ConvexStructure final_structure(const CarrierPtr& target, const AlgebraPtr& algebra,
                                const std::vector<CarrierMap>& maps,
                                const std::vector<ConvexStructure>& sources, std::uint64_t guard) {
  if (maps.size() != sources.size()) throw Error(ErrorKind::Mismatch, "one source structure per map required");
  bool stratified = true;
  for (std::size_t j = 0; j < maps.size(); ++j) {
    if (!same_carrier(maps[j].target(), target)) {
      throw Error(ErrorKind::Mismatch, "sink maps must share the target carrier", {{"map", j}});
    }
    if (!same_carrier(maps[j].source(), sources[j].carrier_ptr())) {
      throw Error(ErrorKind::Mismatch, "map source differs from its structure's carrier", {{"map", j}});
    }
    if (!same_algebra(sources[j].algebra_ptr(), algebra)) {
      throw Error(ErrorKind::Mismatch, "source structure uses a different algebra", {{"map", j}});
    }
    stratified = stratified && sources[j].stratified();
  }
  const std::size_t n = target->size();
  const std::size_t k = algebra->size();
  require_enumerable(k, n, guard);

  std::vector<FuzzySet> kept;
  Values v(n, 0);
  Values pulled;
  while (true) {
    bool keep = true;
    for (std::size_t j = 0; j < maps.size() && keep; ++j) {
      pulled.resize(maps[j].source()->size());
      for (std::size_t x = 0; x < pulled.size(); ++x) pulled[x] = v[maps[j](x)];
      keep = sources[j].contains(pulled);
    }
    if (keep) kept.emplace_back(target, algebra, v);
    // odometer, last position fastest (canonical lexicographic order)
    std::size_t pos = n;
    while (pos > 0 && v[pos - 1] + 1u == k) v[--pos] = 0;
    if (pos == 0) break;
    ++v[pos - 1];
  }
  return validate_structure(target, algebra, kept, stratified);
}

ConvexStructure subspace(const ConvexStructure& structure, const std::vector<std::size_t>& subset) {
  auto incl = inclusion_map(structure.carrier_ptr(), subset);
  return initial_structure(incl.source(), structure.algebra_ptr(), {incl}, {structure}, structure.stratified());
}

ConvexStructure quotient(const ConvexStructure& structure, const CarrierMap& q, std::uint64_t guard) {
  if (!q.is_surjective()) throw Error(ErrorKind::NotSurjective, "quotient map must be surjective");
  return final_structure(q.target(), structure.algebra_ptr(), {q}, {structure}, guard);
}

std::optional<FuzzySet> complement_ctc_violation(const CarrierMap& f, const ConvexStructure& source,
                                                 const ConvexStructure& target) {
  if (!same_carrier(f.source(), source.carrier_ptr()) || !same_carrier(f.target(), target.carrier_ptr())) {
    throw Error(ErrorKind::CarrierMismatch, "map does not run between the given structures");
  }
  for (const auto& member : source.members()) {
    if (!target.contains(complement(image(f, complement(member))))) return member;
  }
  return std::nullopt;
}

bool is_complement_ctc(const CarrierMap& f, const ConvexStructure& source, const ConvexStructure& target) {
  return !complement_ctc_violation(f, source, target).has_value();
}

}  // namespace slcg
