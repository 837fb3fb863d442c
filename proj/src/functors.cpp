#include "slcg/functors.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "slcg/error.hpp"
#include "slcg/random.hpp"

namespace slcg {

namespace {

void require_crisp_size(std::size_t n, std::size_t limit) {
  if (n > limit) {
    throw Error(ErrorKind::GuardExceeded, "carrier too large for crisp masks", {{"size", n}, {"limit", limit}});
  }
}

void require_same(const CarrierPtr& lhs, const CarrierPtr& rhs, const char* what) {
  if (!same_carrier(lhs, rhs)) throw Error(ErrorKind::CarrierMismatch, what);
}

void meet_closure_insert(std::set<CrispSet>& family) {
  std::vector<CrispSet> frontier(family.begin(), family.end());
  while (!frontier.empty()) {
    std::vector<CrispSet> next;
    const std::vector<CrispSet> snapshot(family.begin(), family.end());
    for (auto a : frontier) {
      for (auto b : snapshot) {
        if (family.insert(a & b).second) next.push_back(a & b);
      }
    }
    frontier = std::move(next);
  }
}

// Rectangle B x C on the row-major square of an n-element carrier.
std::uint64_t rectangle(CrispSet lhs, CrispSet rhs, std::size_t n) {
  std::uint64_t out = 0;
  for (auto i : elements_of(lhs)) out |= rhs << (i * n);
  return out;
}

// The factor pair of a rectangle, if `set` is one (the empty set factors as (0, 0)).
std::optional<std::pair<CrispSet, CrispSet>> rectangle_factor(std::uint64_t set, std::size_t n) {
  if (set == 0) return std::pair<CrispSet, CrispSet>{0, 0};
  const CrispSet row_mask = full_set(n);
  CrispSet first = 0;
  CrispSet second = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const CrispSet row = (set >> (i * n)) & row_mask;
    if (row != 0) {
      first |= CrispSet{1} << i;
      second |= row;
    }
  }
  if (rectangle(first, second, n) != set) return std::nullopt;
  return std::pair{first, second};
}

std::uint64_t mul_preimage(const FiniteGroup& group, CrispSet set) {
  const std::size_t n = group.order();
  std::uint64_t out = 0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if ((set >> group.mul(x, y)) & 1u) out |= std::uint64_t{1} << (x * n + y);
    }
  }
  return out;
}

CrispSet inv_preimage(const FiniteGroup& group, CrispSet set) {
  CrispSet out = 0;
  for (std::size_t x = 0; x < group.order(); ++x) {
    if ((set >> group.inv(x)) & 1u) out |= CrispSet{1} << x;
  }
  return out;
}

FuzzySet level_on(const CarrierPtr& carrier, const AlgebraPtr& algebra, AlgebraElement a, CrispSet set) {
  std::vector<AlgebraElement> v(carrier->size(), algebra->bot());
  for (auto x : elements_of(set)) v[x] = a;
  return FuzzySet(carrier, algebra, std::move(v));
}

void for_each_endomorphism(const FiniteGroup& group, const std::function<void(const CarrierMap&)>& fn) {
  const std::size_t n = group.order();
  std::vector<std::size_t> image(n);
  std::function<void(std::size_t)> assign = [&](std::size_t k) {
    if (k == n) {
      fn(CarrierMap(group.carrier(), group.carrier(), image));
      return;
    }
    for (std::size_t t = 0; t < n; ++t) {
      image[k] = t;
      bool ok = true;
      for (std::size_t i = 0; i <= k && ok; ++i) {
        for (std::size_t j = 0; j <= k && ok; ++j) {
          const auto p = group.mul(i, j);
          if (p <= k && group.mul(image[i], image[j]) != image[p]) ok = false;
        }
      }
      if (ok) assign(k + 1);
    }
  };
  assign(0);
}

CrispConvexStructure random_crisp(const CarrierPtr& carrier, Rng& rng) {
  std::vector<CrispSet> subbase(rng.below(4));
  for (auto& s : subbase) s = rng.next() & full_set(carrier->size());
  return crisp_generate(carrier, subbase);
}

}  // namespace

CrispSet full_set(std::size_t n) { return n >= 64 ? ~CrispSet{0} : (CrispSet{1} << n) - 1; }

std::vector<std::size_t> elements_of(CrispSet set) {
  std::vector<std::size_t> out;
  while (set != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(set)));
    set &= set - 1;
  }
  return out;
}

bool crisp_less(CrispSet lhs, CrispSet rhs) {
  const CrispSet diff = lhs ^ rhs;
  if (diff == 0) return false;
  return (rhs & (diff & (~diff + 1))) != 0;
}

bool CrispConvexStructure::contains(CrispSet set) const {
  return std::binary_search(members_.begin(), members_.end(), set, crisp_less);
}

CrispConvexStructure make_canonical_crisp(CarrierPtr carrier, std::vector<CrispSet> family) {
  std::sort(family.begin(), family.end(), crisp_less);
  family.erase(std::unique(family.begin(), family.end()), family.end());
  CrispConvexStructure s;
  s.carrier_ = std::move(carrier);
  s.members_ = std::move(family);
  return s;
}

CrispConvexStructure validate_crisp_structure(const CarrierPtr& carrier, const std::vector<CrispSet>& family) {
  const std::size_t n = carrier->size();
  require_crisp_size(n, kMaxCrispCarrier);
  const CrispSet all = full_set(n);
  for (auto s : family) {
    if ((s & ~all) != 0) throw Error(ErrorKind::UnknownElement, "subset outside the carrier");
  }
  auto s = make_canonical_crisp(carrier, family);
  if (!s.contains(0)) throw Error(ErrorKind::MissingConstant, "empty set missing", {{"missing", nlohmann::json::array()}});
  if (!s.contains(all)) throw Error(ErrorKind::MissingConstant, "carrier missing", {{"missing", carrier->labels()}});
  for (auto a : s.members()) {
    for (auto b : s.members()) {
      if (!s.contains(a & b)) {
        throw Error(ErrorKind::NotMeetClosed, "not closed under intersection",
                    {{"lhs", crisp_labels(*carrier, a)}, {"rhs", crisp_labels(*carrier, b)}});
      }
    }
  }
  return s;
}

CrispConvexStructure crisp_generate(const CarrierPtr& carrier, const std::vector<CrispSet>& subbase) {
  require_crisp_size(carrier->size(), kMaxCrispCarrier);
  std::set<CrispSet> family(subbase.begin(), subbase.end());
  family.insert(0);
  family.insert(full_set(carrier->size()));
  meet_closure_insert(family);
  return make_canonical_crisp(carrier, {family.begin(), family.end()});
}

CrispConvexStructure crisp_join(const std::vector<CrispConvexStructure>& structures) {
  if (structures.empty()) throw Error(ErrorKind::Mismatch, "join of no structures");
  std::vector<CrispSet> all;
  for (const auto& s : structures) {
    require_same(s.carrier_ptr(), structures.front().carrier_ptr(), "joined structures differ in carrier");
    all.insert(all.end(), s.members().begin(), s.members().end());
  }
  return crisp_generate(structures.front().carrier_ptr(), all);
}

CrispConvexStructure crisp_initial(const CarrierPtr& source, const std::vector<CarrierMap>& maps,
                                   const std::vector<CrispConvexStructure>& targets) {
  if (maps.size() != targets.size()) throw Error(ErrorKind::Mismatch, "one target per map required");
  std::vector<CrispSet> subbase;
  for (std::size_t j = 0; j < maps.size(); ++j) {
    require_same(maps[j].source(), source, "map source differs from the carrier");
    require_same(maps[j].target(), targets[j].carrier_ptr(), "map target differs from the structure");
    for (auto m : targets[j].members()) subbase.push_back(crisp_preimage(maps[j], m));
  }
  return crisp_generate(source, subbase);
}

CrispSet crisp_preimage(const CarrierMap& f, CrispSet set) {
  require_crisp_size(f.source()->size(), kMaxCrispCarrier);
  CrispSet out = 0;
  for (std::size_t x = 0; x < f.source()->size(); ++x) {
    if ((set >> f(x)) & 1u) out |= CrispSet{1} << x;
  }
  return out;
}

bool is_cp(const CarrierMap& f, const CrispConvexStructure& source, const CrispConvexStructure& target) {
  require_same(f.source(), source.carrier_ptr(), "map source differs from the structure");
  require_same(f.target(), target.carrier_ptr(), "map target differs from the structure");
  return std::all_of(target.members().begin(), target.members().end(),
                     [&](CrispSet m) { return source.contains(crisp_preimage(f, m)); });
}

CheckReport is_cg(const FiniteGroup& group, const CrispConvexStructure& structure) {
  require_same(group.carrier(), structure.carrier_ptr(), "structure does not live on the group's carrier");
  const std::size_t n = group.order();
  require_crisp_size(n, kMaxCrispGroup);
  CheckReport r;
  r.property = "cg";
  r.claim = "multiplication and inversion are convexity-preserving";
  const auto& X = *group.carrier();
  for (auto m : structure.members()) {
    ++r.cases;
    const auto pulled = mul_preimage(group, m);
    const auto factors = rectangle_factor(pulled, n);
    if (!factors || !structure.contains(factors->first) || !structure.contains(factors->second)) {
      nlohmann::json pairs = nlohmann::json::array();
      for (auto i : elements_of(pulled)) pairs.push_back({X.label(i / n), X.label(i % n)});
      r.fail({{"map", "m"}, {"member", crisp_labels(X, m)}, {"preimage", pairs}});
      return r;
    }
  }
  for (auto m : structure.members()) {
    ++r.cases;
    const auto pulled = inv_preimage(group, m);
    if (!structure.contains(pulled)) {
      r.fail({{"map", "r"}, {"member", crisp_labels(X, m)}, {"preimage", crisp_labels(X, pulled)}});
      return r;
    }
  }
  return r;
}

ConvexStructure to_fuzzy(const CrispConvexStructure& structure) {
  const auto two = chain(2);
  std::vector<FuzzySet> family;
  for (auto m : structure.members()) family.push_back(level_on(structure.carrier_ptr(), two, two->top(), m));
  return make_canonical_structure(structure.carrier_ptr(), two, std::move(family), true);
}

CrispConvexStructure to_crisp(const ConvexStructure& structure) {
  const auto& L = structure.algebra();
  if (L.size() != 2) throw Error(ErrorKind::AlgebraMismatch, "crisp identification needs a two-element algebra");
  require_crisp_size(structure.carrier().size(), kMaxCrispCarrier);
  std::vector<CrispSet> family;
  for (const auto& m : structure.members()) {
    CrispSet s = 0;
    for (std::size_t x = 0; x < m.size(); ++x) {
      if (m[x] == L.top()) s |= CrispSet{1} << x;
    }
    family.push_back(s);
  }
  return validate_crisp_structure(structure.carrier_ptr(), family);
}

ConvexStructure omega(const CrispConvexStructure& structure, const AlgebraPtr& algebra) {
  std::vector<FuzzySet> family;
  for (std::size_t a = 0; a < algebra->size(); ++a) {
    for (auto m : structure.members()) {
      family.push_back(level_on(structure.carrier_ptr(), algebra, static_cast<AlgebraElement>(a), m));
    }
  }
  auto direct = make_canonical_structure(structure.carrier_ptr(), algebra, family, true);
  auto generated = generate(structure.carrier_ptr(), algebra, family, true);
  if (!(direct == generated)) {
    throw Error(ErrorKind::AssertionFailed, "omega family is not already a structure",
                {{"direct", direct.size()}, {"generated", generated.size()}});
  }
  return direct;
}

CrispConvexStructure largest_cg_within(const FiniteGroup& group, const CarrierPtr& carrier,
                                       std::vector<CrispSet> family) {
  require_same(group.carrier(), carrier, "family does not live on the group's carrier");
  const std::size_t n = group.order();
  require_crisp_size(n, kMaxCrispGroup);
  auto current = make_canonical_crisp(carrier, std::move(family));
  for (;;) {
    std::vector<CrispSet> kept;
    for (auto a : current.members()) {
      if (!current.contains(inv_preimage(group, a))) continue;
      const auto factors = rectangle_factor(mul_preimage(group, a), n);
      if (!factors || !current.contains(factors->first) || !current.contains(factors->second)) continue;
      kept.push_back(a);
    }
    if (kept.size() == current.size()) break;
    current = make_canonical_crisp(carrier, std::move(kept));
  }
  return current;
}

CrispConvexStructure rho(const FiniteGroup& group, const ConvexStructure& structure) {
  if (!structure.stratified()) throw Error(ErrorKind::NotStratified, "the reflector needs a stratified structure");
  if (!same_carrier(group.carrier(), structure.carrier_ptr())) {
    throw Error(ErrorKind::Mismatch, "structure does not live on the group's carrier");
  }
  const std::size_t n = group.order();
  require_crisp_size(n, kMaxCrispGroup);
  const auto& L = structure.algebra_ptr();
  std::vector<CrispSet> d0;
  for (CrispSet s = 0; s <= full_set(n); ++s) {
    bool all_levels = true;
    for (std::size_t a = 0; a < L->size() && all_levels; ++a) {
      all_levels = structure.contains(level_on(structure.carrier_ptr(), L, static_cast<AlgebraElement>(a), s));
    }
    if (all_levels) d0.push_back(s);
  }
  auto result = largest_cg_within(group, structure.carrier_ptr(), std::move(d0));
  const auto cg = is_cg(group, result);
  if (!cg.holds) throw Error(ErrorKind::AssertionFailed, "reflector output is not a convex group", cg.to_json());
  const auto embedded = omega(result, L);
  for (const auto& m : embedded.members()) {
    if (!structure.contains(m)) {
      throw Error(ErrorKind::AssertionFailed, "omega of the reflector escapes the structure",
                  {{"member", value_labels(m)}});
    }
  }
  return result;
}

CheckReport check_adjunction(const FiniteGroup& group, const ConvexStructure& structure) {
  CheckReport r;
  r.property = "adjunction";
  r.claim = "rho is a left inverse and a left adjoint of omega";
  const auto reflected = rho(group, structure);
  const auto& L = structure.algebra_ptr();
  const auto embedded = omega(reflected, L);
  const auto& X = *group.carrier();
  nlohmann::json reflected_json = nlohmann::json::array();
  for (auto m : reflected.members()) reflected_json.push_back(crisp_labels(X, m));
  r.details = {{"rho", reflected_json}};

  for (const auto& m : embedded.members()) {
    ++r.cases;
    if (!structure.contains(m)) {
      r.fail({{"law", "omega(rho(B)) <= B"}, {"member", value_labels(m)}});
      return r;
    }
  }
  ++r.cases;
  if (!(rho(group, embedded) == reflected)) {
    r.fail({{"law", "rho(omega(rho(B))) = rho(B)"}});
    return r;
  }
  const std::vector<CrispConvexStructure> codomains = {reflected,
                                                       make_canonical_crisp(group.carrier(), {0, full_set(X.size())})};
  for_each_endomorphism(group, [&](const CarrierMap& f) {
    if (!r.holds) return;
    for (const auto& c : codomains) {
      ++r.cases;
      const bool crisp_side = is_cp(f, reflected, c);
      const bool fuzzy_side = is_lcp(f, structure, omega(c, L));
      if (crisp_side != fuzzy_side) {
        nlohmann::json target = nlohmann::json::array();
        for (auto m : c.members()) target.push_back(crisp_labels(X, m));
        r.fail({{"law", "hom-set correspondence"},
                {"map", f.table()},
                {"codomain", target},
                {"cp", crisp_side},
                {"lcp", fuzzy_side}});
        return;
      }
    }
  });
  return r;
}

CheckReport check_left_inverse(const FiniteGroup& group, const CrispConvexStructure& structure,
                               const AlgebraPtr& algebra) {
  CheckReport r;
  r.property = "left-inverse";
  r.claim = "rho(omega(C)) = C for every crisp convex group";
  r.cases = 1;
  const auto cg = is_cg(group, structure);
  if (!cg.holds) throw Error(ErrorKind::HypothesisFailed, "not a crisp convex group", cg.to_json());
  const auto back = rho(group, omega(structure, algebra));
  if (!(back == structure)) {
    nlohmann::json got = nlohmann::json::array();
    for (auto m : back.members()) got.push_back(crisp_labels(*group.carrier(), m));
    r.fail({{"rho_omega", got}});
  }
  return r;
}

CheckReport check_omega_preserves(std::uint64_t seed, std::size_t cases, const AlgebraPtr& algebra) {
  CheckReport r;
  r.property = "omega-preserves";
  r.claim = "omega preserves initial structures and joins";
  r.seed = seed;
  Rng rng(seed);
  for (std::size_t i = 0; i < cases && r.holds; ++i) {
    const auto x = numbered_carrier(1 + rng.below(4));
    const auto y1 = numbered_carrier(1 + rng.below(4));
    const auto y2 = numbered_carrier(1 + rng.below(4));
    const auto f1 = random_map(x, y1, rng);
    const auto f2 = random_map(x, y2, rng);
    const auto g1 = random_crisp(y1, rng);
    const auto g2 = random_crisp(y2, rng);
    ++r.cases;
    const auto lhs = omega(crisp_initial(x, {f1, f2}, {g1, g2}), algebra);
    const auto rhs = initial_structure(x, algebra, {f1, f2}, {omega(g1, algebra), omega(g2, algebra)}, true);
    if (!(lhs == rhs)) {
      r.fail({{"case", i}, {"law", "initial"}, {"maps", {f1.table(), f2.table()}}});
      break;
    }
    const auto c1 = random_crisp(x, rng);
    const auto c2 = random_crisp(x, rng);
    ++r.cases;
    if (!(omega(crisp_join({c1, c2}), algebra) == join_structures({omega(c1, algebra), omega(c2, algebra)}))) {
      r.fail({{"case", i}, {"law", "join"}});
    }
  }
  return r;
}

CheckReport cp_iff_lcp_under_omega(const CarrierMap& f, const CrispConvexStructure& source,
                                   const CrispConvexStructure& target, const AlgebraPtr& algebra) {
  CheckReport r;
  r.property = "cp-iff-lcp";
  r.claim = "f is CP iff it is LCP between the omega-images";
  r.cases = 1;
  const bool cp = is_cp(f, source, target);
  const bool lcp = is_lcp(f, omega(source, algebra), omega(target, algebra));
  r.details = {{"cp", cp}, {"lcp", lcp}};
  if (cp != lcp) r.fail(r.details);
  return r;
}

nlohmann::json crisp_labels(const Carrier& carrier, CrispSet set) {
  nlohmann::json out = nlohmann::json::array();
  for (auto x : elements_of(set)) out.push_back(carrier.label(x));
  return out;
}

}  // namespace slcg
