#include "slcg/oracle.hpp"

#include <algorithm>

#include "slcg/error.hpp"
#include "slcg/random.hpp"

namespace slcg::oracle {

namespace {

std::uint64_t power_or_saturate(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > UINT64_MAX / base) return UINT64_MAX;
    out *= base;
  }
  return out;
}

bool listed(const std::vector<FuzzySet>& family, const std::vector<AlgebraElement>& values) {
  return std::any_of(family.begin(), family.end(), [&](const FuzzySet& m) { return m.values() == values; });
}

std::vector<AlgebraElement> meet_values(const DeMorganAlgebra& L, const std::vector<AlgebraElement>& a,
                                        const std::vector<AlgebraElement>& b) {
  std::vector<AlgebraElement> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = L.meet(a[i], b[i]);
  return out;
}

std::vector<AlgebraElement> neg_values(const DeMorganAlgebra& L, const std::vector<AlgebraElement>& a) {
  std::vector<AlgebraElement> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = L.neg(a[i]);
  return out;
}

bool below(const DeMorganAlgebra& L, const std::vector<AlgebraElement>& a, const std::vector<AlgebraElement>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!L.leq(a[i], b[i])) return false;
  }
  return true;
}

// (A . B)(u) = join over xy = u of A(x) ^ B(y)
std::vector<AlgebraElement> conv(const FiniteGroup& G, const DeMorganAlgebra& L, const std::vector<AlgebraElement>& a,
                                 const std::vector<AlgebraElement>& b) {
  std::vector<AlgebraElement> out(G.order(), L.bot());
  for (std::size_t x = 0; x < G.order(); ++x) {
    for (std::size_t y = 0; y < G.order(); ++y) {
      const auto u = G.mul(x, y);
      out[u] = L.join(out[u], L.meet(a[x], b[y]));
    }
  }
  return out;
}

std::vector<AlgebraElement> inverted(const FiniteGroup& G, const std::vector<AlgebraElement>& a) {
  std::vector<AlgebraElement> out(a.size());
  for (std::size_t u = 0; u < a.size(); ++u) out[u] = a[G.inv(u)];
  return out;
}

// Some member C with a <= C'(x) and C' <= A'.
bool remote(const ConvexStructure& C, std::size_t x, AlgebraElement a, const std::vector<AlgebraElement>& A) {
  const auto& L = C.algebra();
  const auto a_comp = neg_values(L, A);
  for (const auto& m : C.members()) {
    const auto mc = neg_values(L, m.values());
    if (L.leq(a, mc[x]) && below(L, mc, a_comp)) return true;
  }
  return false;
}

bool is_crisp_structure(const std::vector<std::uint64_t>& family, std::uint64_t all) {
  auto has = [&](std::uint64_t s) { return std::find(family.begin(), family.end(), s) != family.end(); };
  if (!has(0) || !has(all)) return false;
  for (auto a : family) {
    for (auto b : family) {
      if (!has(a & b)) return false;
    }
  }
  return true;
}

bool crisp_is_cg(const FiniteGroup& G, const std::vector<std::uint64_t>& family) {
  const std::size_t n = G.order();
  auto has = [&](std::uint64_t s) { return std::find(family.begin(), family.end(), s) != family.end(); };
  for (auto A : family) {
    std::uint64_t r = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if ((A >> G.inv(x)) & 1u) r |= std::uint64_t{1} << x;
    }
    if (!has(r)) return false;
    bool rect = false;
    for (auto B : family) {
      for (auto D : family) {
        bool same = true;
        for (std::size_t x = 0; x < n && same; ++x) {
          for (std::size_t y = 0; y < n && same; ++y) {
            const bool in_pre = (A >> G.mul(x, y)) & 1u;
            const bool in_rect = ((B >> x) & 1u) && ((D >> y) & 1u);
            same = in_pre == in_rect;
          }
        }
        rect = rect || same;
      }
    }
    if (!rect) return false;
  }
  return true;
}

std::uint64_t fnv(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<FuzzySet> random_sets(const CarrierPtr& X, const AlgebraPtr& L, Rng& rng, std::size_t k) {
  std::vector<FuzzySet> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(random_fuzzy_set(X, L, rng));
  return out;
}

CrispConvexStructure random_crisp(const CarrierPtr& X, Rng& rng) {
  std::vector<CrispSet> subbase(1 + rng.below(3));
  for (auto& s : subbase) s = rng.next() & full_set(X->size());
  return crisp_generate(X, subbase);
}

}  // namespace

void for_each_fuzzy_set(const CarrierPtr& carrier, const AlgebraPtr& algebra, std::uint64_t guard,
                        const std::function<void(const FuzzySet&)>& fn) {
  const std::size_t n = carrier->size();
  const std::size_t k = algebra->size();
  const auto total = power_or_saturate(k, n);
  if (total > guard) {
    throw Error(ErrorKind::GuardExceeded, "L^X exceeds the enumeration guard", {{"size", total}, {"guard", guard}});
  }
  std::vector<AlgebraElement> v(n, 0);
  for (std::uint64_t i = 0; i < total; ++i) {
    fn(FuzzySet(carrier, algebra, v));
    for (std::size_t pos = n; pos-- > 0;) {
      if (++v[pos] < k) break;
      v[pos] = 0;
    }
  }
}

std::vector<FuzzySet> enumerate_fuzzy_sets(const CarrierPtr& carrier, const AlgebraPtr& algebra,
                                           std::uint64_t guard) {
  std::vector<FuzzySet> out;
  for_each_fuzzy_set(carrier, algebra, guard, [&](const FuzzySet& s) { out.push_back(s); });
  return out;
}

ConvexStructure naive_generate(const CarrierPtr& carrier, const AlgebraPtr& algebra,
                               const std::vector<FuzzySet>& subbase, bool stratified) {
  const auto& L = *algebra;
  std::vector<std::vector<AlgebraElement>> seeds;
  auto add = [&](std::vector<AlgebraElement> v) {
    if (std::find(seeds.begin(), seeds.end(), v) == seeds.end()) seeds.push_back(std::move(v));
  };
  if (stratified) {
    for (std::size_t a = 0; a < L.size(); ++a) add(std::vector<AlgebraElement>(carrier->size(), AlgebraElement(a)));
  } else {
    add(std::vector<AlgebraElement>(carrier->size(), L.bot()));
    add(std::vector<AlgebraElement>(carrier->size(), L.top()));
  }
  for (const auto& s : subbase) add(s.values());
  if (seeds.size() > kNaiveGenerateLimit) {
    throw Error(ErrorKind::GuardExceeded, "too many seeds for subset enumeration",
                {{"size", seeds.size()}, {"guard", kNaiveGenerateLimit}});
  }
  std::vector<FuzzySet> family;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << seeds.size()); ++mask) {
    std::vector<AlgebraElement> m(carrier->size(), L.top());
    for (std::size_t i = 0; i < seeds.size(); ++i) {
      if ((mask >> i) & 1u) m = meet_values(L, m, seeds[i]);
    }
    if (!listed(family, m)) family.emplace_back(carrier, algebra, std::move(m));
  }
  return make_canonical_structure(carrier, algebra, std::move(family), stratified);
}

std::vector<CrispConvexStructure> enumerate_crisp_structures(const CarrierPtr& carrier) {
  const std::size_t n = carrier->size();
  if (n > 3) throw Error(ErrorKind::GuardExceeded, "crisp enumeration needs |X| <= 3", {{"size", n}, {"guard", 3}});
  const std::uint64_t subsets = std::uint64_t{1} << n;
  const std::uint64_t all = subsets - 1;
  std::vector<CrispConvexStructure> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << subsets); ++pick) {
    std::vector<std::uint64_t> family;
    for (std::uint64_t s = 0; s < subsets; ++s) {
      if ((pick >> s) & 1u) family.push_back(s);
    }
    if (is_crisp_structure(family, all)) out.push_back(validate_crisp_structure(carrier, family));
  }
  return out;
}

CrispConvexStructure rho_by_enumeration(const FiniteGroup& group, const ConvexStructure& structure) {
  if (!structure.stratified()) throw Error(ErrorKind::NotStratified, "the reflector needs a stratified structure");
  const auto& L = structure.algebra();
  const std::size_t n = group.order();
  std::vector<std::uint64_t> joined;
  for (const auto& c : enumerate_crisp_structures(group.carrier())) {
    const auto& fam = c.members();
    if (!crisp_is_cg(group, fam)) continue;
    bool inside = true;
    for (std::size_t a = 0; a < L.size() && inside; ++a) {
      for (auto s : fam) {
        std::vector<AlgebraElement> v(n, L.bot());
        for (std::size_t x = 0; x < n; ++x) {
          if ((s >> x) & 1u) v[x] = AlgebraElement(a);
        }
        if (!listed(structure.members(), v)) {
          inside = false;
          break;
        }
      }
    }
    if (!inside) continue;
    for (auto s : fam) {
      if (std::find(joined.begin(), joined.end(), s) == joined.end()) joined.push_back(s);
    }
  }
  for (bool grew = true; grew;) {
    grew = false;
    const auto snapshot = joined;
    for (auto a : snapshot) {
      for (auto b : snapshot) {
        if (std::find(joined.begin(), joined.end(), a & b) == joined.end()) {
          joined.push_back(a & b);
          grew = true;
        }
      }
    }
  }
  return validate_crisp_structure(group.carrier(), joined);
}

bool naive_is_lcp(const CarrierMap& f, const ConvexStructure& source, const ConvexStructure& target) {
  for (const auto& m : target.members()) {
    std::vector<AlgebraElement> pulled(f.source()->size());
    for (std::size_t x = 0; x < pulled.size(); ++x) pulled[x] = m[f(x)];
    if (!listed(source.members(), pulled)) return false;
  }
  return true;
}

bool naive_in_square(const FiniteGroup& group, const ConvexStructure& structure, const FuzzySet& set) {
  const auto& L = structure.algebra();
  const std::size_t n = group.order();
  for (const auto& b : structure.members()) {
    for (const auto& c : structure.members()) {
      bool same = true;
      for (std::size_t i = 0; i < n && same; ++i) {
        for (std::size_t j = 0; j < n && same; ++j) same = set[i * n + j] == L.meet(b[i], c[j]);
      }
      if (same) return true;
    }
  }
  return false;
}

bool naive_is_slcg(const FiniteGroup& group, const ConvexStructure& structure) {
  const std::size_t n = group.order();
  for (const auto& m : structure.members()) {
    std::vector<AlgebraElement> pulled(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) pulled[x * n + y] = m[group.mul(x, y)];
    }
    if (!naive_in_square(group, structure, FuzzySet(group.square(), structure.algebra_ptr(), pulled))) return false;
    if (!listed(structure.members(), inverted(group, m.values()))) return false;
  }
  return true;
}

bool naive_odot_condition(const FiniteGroup& group, const ConvexStructure& structure) {
  const auto& L = structure.algebra();
  const auto& members = structure.members();
  const std::size_t n = group.order();
  const std::vector<AlgebraElement> top(n, L.top());
  const auto top_inv = inverted(group, top);
  std::vector<AlgebraElement> levels;
  for (std::size_t a = 0; a < L.size(); ++a) {
    if (L.is_coprime(AlgebraElement(a))) levels.push_back(AlgebraElement(a));
  }
  for (const auto& A : members) {
    const auto a_comp = neg_values(L, A.values());
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (auto a : levels) {
          if (!remote(structure, group.mul(x, group.inv(y)), a, A.values())) continue;
          bool found = false;
          for (const auto& B : members) {
            for (const auto& C : members) {
              if (!remote(structure, x, a, B.values()) && !remote(structure, y, a, C.values())) continue;
              const auto lhs = conv(group, L, neg_values(L, B.values()), top_inv);
              const auto rhs = conv(group, L, top, inverted(group, neg_values(L, C.values())));
              std::vector<AlgebraElement> joined(n);
              for (std::size_t u = 0; u < n; ++u) joined[u] = L.join(lhs[u], rhs[u]);
              if (below(L, joined, a_comp)) {
                found = true;
                break;
              }
            }
            if (found) break;
          }
          if (!found) return false;
        }
      }
    }
  }
  return true;
}

std::vector<NamedAlgebra> catalog_algebras() {
  return {{"chain2", chain(2)},
          {"chain3", chain(3)},
          {"chain4", chain(4)},
          {"chain5", chain(5)},
          {"cube2", boolean_cube(2)},
          {"chain2xchain3", product(*chain(2), *chain(3))}};
}

std::vector<NamedGroup> catalog_groups() {
  std::vector<NamedGroup> out;
  for (std::size_t n = 1; n <= 6; ++n) out.push_back({"Z" + std::to_string(n), cyclic_group(n)});
  out.push_back({"V4", klein_four()});
  out.push_back({"S3", symmetric_group3()});
  return out;
}

nlohmann::json Instance::describe() const {
  return {{"recipe", recipe}, {"group", group_name}, {"algebra", algebra_name}, {"members", structure.size()}};
}

const std::vector<std::string>& recipe_names() {
  static const std::vector<std::string> names = {"indiscrete", "random-subbase", "omega-of-random-crisp",
                                                 "omega-of-random-crisp-cg", "discrete", "join-of-random",
                                                 "mixed"};
  return names;
}

std::vector<Instance> sample_instances(const std::string& recipe, std::uint64_t seed, std::size_t n) {
  const auto& names = recipe_names();
  if (std::find(names.begin(), names.end(), recipe) == names.end()) {
    throw Error(ErrorKind::UnknownRecipe, "unknown instance recipe", {{"recipe", recipe}, {"known", names}});
  }
  static const auto algebras = catalog_algebras();
  static const auto groups = catalog_groups();
  Rng rng(seed ^ fnv(recipe));
  std::vector<Instance> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::string r = recipe;
    if (r == "mixed") r = names[i % (names.size() - 1)];
    const NamedGroup* g = &groups[rng.below(groups.size())];
    const NamedAlgebra* l = &algebras[rng.below(algebras.size())];
    if (r == "discrete") {
      while (power_or_saturate(l->algebra->size(), g->group.order()) > 256) {
        g = &groups[rng.below(groups.size())];
        l = &algebras[rng.below(algebras.size())];
      }
    }
    const auto& X = g->group.carrier();
    const auto& L = l->algebra;
    std::optional<ConvexStructure> s;
    if (r == "indiscrete") {
      s = generate(X, L, {}, true);
    } else if (r == "random-subbase") {
      s = generate(X, L, random_sets(X, L, rng, 1 + rng.below(3)), true);
    } else if (r == "omega-of-random-crisp") {
      s = omega(random_crisp(X, rng), L);
    } else if (r == "omega-of-random-crisp-cg") {
      const auto c = random_crisp(X, rng);
      s = omega(largest_cg_within(g->group, X, c.members()), L);
    } else if (r == "discrete") {
      s = make_canonical_structure(X, L, enumerate_fuzzy_sets(X, L), true);
    } else {
      const auto lhs = generate(X, L, random_sets(X, L, rng, 1), true);
      const auto rhs = generate(X, L, random_sets(X, L, rng, 1), true);
      s = join_structures({lhs, rhs});
    }
    out.push_back(Instance{r, g->name, l->name, g->group, std::move(*s)});
  }
  return out;
}

}  // namespace slcg::oracle
