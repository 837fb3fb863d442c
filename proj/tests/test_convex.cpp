#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slcg/convex.hpp"
#include "slcg/group.hpp"
#include "support.hpp"

using namespace slcg;
using testing_support::closure;
using testing_support::Gen;
using testing_support::random_map;
using testing_support::random_set;
using testing_support::values;

namespace {

using Vals = std::vector<AlgebraElement>;

std::vector<Vals> member_values(const ConvexStructure& s) {
  std::vector<Vals> out;
  for (const auto& m : s.members()) out.push_back(m.values());
  return out;
}

// x_a <= C' <= A' for some member C, straight from the definition.
bool remote_oracle(const ConvexStructure& s, std::size_t x, AlgebraElement a, const FuzzySet& A) {
  const auto& L = s.algebra();
  for (const auto& c : s.members()) {
    bool ok = L.leq(a, L.neg(c[x]));
    for (std::size_t z = 0; z < c.size() && ok; ++z) ok = L.leq(L.neg(c[z]), L.neg(A[z]));
    if (ok) return true;
  }
  return false;
}

ConvexStructure random_structure(const CarrierPtr& X, const AlgebraPtr& L, Gen& g, std::size_t max_sets = 3) {
  std::vector<FuzzySet> s;
  for (auto k = g.below(max_sets + 1); k > 0; --k) s.push_back(random_set(X, L, g));
  return generate(X, L, s, true);
}

std::vector<AlgebraPtr> algebras() { return {chain(2), chain(3), chain(4), boolean_cube(2)}; }

}  // namespace

TEST_CASE("validation examples") {
  auto L2 = chain(2);
  auto X = numbered_carrier(2);
  CHECK_NOTHROW(validate_structure(X, L2, {constant(X, L2, 0), constant(X, L2, 1)}, false));
  auto L3 = chain(3);
  CHECK(validate_structure(X, L3, {constant(X, L3, 0), constant(X, L3, 1), constant(X, L3, 2)}, true).size() == 3);
  try {
    validate_structure(X, L2, {constant(X, L2, 0), characteristic(X, L2, {0})}, false);
    FAIL("expected MissingConstant");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingConstant);
  }
  try {
    validate_structure(X, L3, {constant(X, L3, 0), constant(X, L3, 2), values(X, L3, {1, 2}), values(X, L3, {2, 1})},
                       false);
    FAIL("expected NotMeetClosed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotMeetClosed);
  }
  CHECK_THROWS_AS(validate_structure(X, L3, {constant(X, L3, 0), constant(X, L3, 2)}, true), Error);
}

TEST_CASE("generation examples") {
  auto L3 = chain(3);
  auto X = numbered_carrier(2);
  CHECK(member_values(generate(X, L3, {}, true)) == std::vector<Vals>{{0, 0}, {1, 1}, {2, 2}});
  auto L2 = chain(2);
  CHECK(member_values(generate(X, L2, {characteristic(X, L2, {0})}, false)) == std::vector<Vals>{{0, 0}, {1, 0}, {1, 1}});
  auto one = make_carrier({"x"});
  CHECK(member_values(generate(one, L3, {values(one, L3, {1})}, true)) == std::vector<Vals>{{0}, {1}, {2}});
}

TEST_CASE("base_of examples") {
  auto L3 = chain(3);
  auto X = numbered_carrier(2);
  const auto a = values(X, L3, {1, 2});
  const auto b = values(X, L3, {2, 0});
  CHECK(base_of({a}) == std::vector<FuzzySet>{a});
  auto two = base_of({a, b});
  CHECK(two.size() == 3);
  CHECK(std::find(two.begin(), two.end(), pointwise_meet(a, b)) != two.end());
  Gen g(3);
  for (int round = 0; round < 50; ++round) {
    std::vector<FuzzySet> s = {random_set(X, L3, g), random_set(X, L3, g), random_set(X, L3, g)};
    std::vector<Vals> expected;
    for (unsigned mask = 1; mask < 8; ++mask) {
      Vals m(2, 2);
      for (unsigned i = 0; i < 3; ++i) {
        if ((mask >> i) & 1u) m = {L3->meet(m[0], s[i][0]), L3->meet(m[1], s[i][1])};
      }
      if (std::find(expected.begin(), expected.end(), m) == expected.end()) expected.push_back(m);
    }
    std::sort(expected.begin(), expected.end());
    std::vector<Vals> got;
    for (const auto& m : base_of(s)) got.push_back(m.values());
    CHECK(got == expected);
  }
}

TEST_CASE("join examples") {
  auto L2 = chain(2);
  auto X = numbered_carrier(2);
  const auto c0 = generate(X, L2, {characteristic(X, L2, {0})}, false);
  const auto c1 = generate(X, L2, {characteristic(X, L2, {1})}, false);
  CHECK(join_structures({c0, c0}) == c0);
  CHECK(join_structures({c0, c1}).size() == 4);
  auto L3 = chain(3);
  Gen g(9);
  const auto s = random_structure(X, L3, g);
  CHECK(join_structures({s, generate(X, L3, {}, true)}) == s);
  CHECK_THROWS_AS(join_structures({c0, generate(X, L2, {}, true)}), Error);
}

TEST_CASE("remote neighborhoods") {
  auto L2 = chain(2);
  auto X = numbered_carrier(2);
  const auto c = generate(X, L2, {characteristic(X, L2, {0})}, false);
  std::vector<Vals> r1;
  for (Vals v : std::vector<Vals>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}) {
    if (in_remote_nbhd(c, 1, 1, values(X, L2, v))) r1.push_back(v);
  }
  CHECK(r1 == std::vector<Vals>{{0, 0}, {1, 0}});
  CHECK(in_remote_nbhd(c, 0, 1, constant(X, L2, 0)));
  CHECK_FALSE(in_remote_nbhd(c, 0, 1, constant(X, L2, 1)));
  CHECK_THROWS_AS(in_remote_nbhd(c, 0, 0, constant(X, L2, 0)), Error);

  Gen g(21);
  for (int round = 0; round < 100; ++round) {
    const auto L = algebras()[g.below(4)];
    auto Y = numbered_carrier(1 + g.below(3));
    const auto s = random_structure(Y, L, g);
    const auto A = random_set(Y, L, g);
    for (std::size_t x = 0; x < Y->size(); ++x) {
      for (auto a : L->coprime_elements()) CHECK(in_remote_nbhd(s, x, a, A) == remote_oracle(s, x, a, A));
    }
  }
}

TEST_CASE("LCP examples") {
  auto L2 = chain(2);
  auto X = numbered_carrier(2);
  const auto c = generate(X, L2, {characteristic(X, L2, {0})}, false);
  CHECK(is_lcp(identity_map(X), c, c));
  const CarrierMap swap(X, X, {1, 0});
  CHECK_FALSE(is_lcp(swap, c, c));
  CHECK(*lcp_violation(swap, c, c) == characteristic(X, L2, {0}));
  auto L3 = chain(3);
  auto Y = numbered_carrier(3);
  Gen g(4);
  const auto target = random_structure(Y, L3, g);
  const CarrierMap constant_map(X, Y, {2, 2});
  CHECK(is_lcp(constant_map, generate(X, L3, {}, true), target));
}

TEST_CASE("property: LCP, remote criterion and complement form agree") {
  Gen g(77);
  int lcp_true = 0;
  for (int round = 0; round < 300; ++round) {
    const auto L = algebras()[g.below(4)];
    auto X = numbered_carrier(1 + g.below(3));
    auto Y = numbered_carrier(1 + g.below(3));
    const auto f = random_map(X, Y, g);
    const auto target = random_structure(Y, L, g, 2);
    auto source = random_structure(X, L, g, 1);
    if (g.below(2)) source = join_structures({source, initial_structure(X, L, {f}, {target})});
    const bool lcp = is_lcp(f, source, target);
    lcp_true += lcp;
    CHECK(lcp == is_lcp_via_remote(f, source, target));
    bool complement_form = true;
    for (const auto& m : target.members()) {
      complement_form = complement_form && source.contains(complement(complement(preimage(f, m))));
    }
    CHECK(lcp == complement_form);
  }
  CHECK(lcp_true > 30);
  CHECK(lcp_true < 300);
}

TEST_CASE("base and subbase checks") {
  auto L2 = chain(2);
  auto X = numbered_carrier(2);
  Gen g(8);
  for (const auto& L : algebras()) {
    const auto s = random_structure(X, L, g);
    CHECK(is_base_check(X, L, s.members()));
    std::vector<FuzzySet> sb = {random_set(X, L, g), random_set(X, L, g)};
    auto fam = base_of(sb);
    for (std::size_t a = 0; a < L->size(); ++a) fam.push_back(constant(X, L, AlgebraElement(a)));
    CHECK(is_base_check(X, L, base_of(fam)));
  }
  CHECK_FALSE(is_subbase_check(X, L2, {characteristic(X, L2, {0})}));
  CHECK(is_subbase_check(X, L2, {characteristic(X, L2, {0}), characteristic(X, L2, {1})}));
}

TEST_CASE("products and their cross-check against the initial structure") {
  auto L3 = chain(3);
  auto X = numbered_carrier(2);
  const auto ind = generate(X, L3, {}, true);
  CHECK(product_structure(ind, ind).size() == 3);
  auto L2 = chain(2);
  const auto bare = generate(X, L2, {}, false);
  CHECK(product_structure(bare, bare).size() == 2);
  const auto c = generate(X, L2, {characteristic(X, L2, {0})}, false);
  const auto p = product_structure(c, c);
  std::vector<Vals> got = member_values(p);
  // rectangles of {∅, {0}, X} squared, by hand
  std::vector<Vals> expected = {{0, 0, 0, 0}, {1, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}, {1, 1, 1, 1}};
  std::sort(expected.begin(), expected.end());
  CHECK(got == expected);

  Gen g(31);
  for (int round = 0; round < 60; ++round) {
    const auto L = algebras()[g.below(4)];
    auto A = numbered_carrier(1 + g.below(3));
    auto B = numbered_carrier(1 + g.below(3));
    const auto s1 = random_structure(A, L, g, 2);
    const auto s2 = random_structure(B, L, g, 2);
    const auto prod = product_structure(s1, s2);
    const auto AB = prod.carrier_ptr();
    const auto init = initial_structure(AB, L, {first_projection(AB, A, B), second_projection(AB, A, B)}, {s1, s2});
    CHECK(prod == init);
    std::vector<Vals> rect;
    for (const auto& m1 : s1.members()) {
      for (const auto& m2 : s2.members()) rect.push_back(product_set(AB, m1, m2).values());
    }
    std::sort(rect.begin(), rect.end());
    rect.erase(std::unique(rect.begin(), rect.end()), rect.end());
    CHECK(member_values(prod) == rect);
  }
}

TEST_CASE("initial structures") {
  auto L3 = chain(3);
  auto X = numbered_carrier(3);
  Gen g(12);
  const auto s = random_structure(X, L3, g);
  CHECK(initial_structure(X, L3, {identity_map(X)}, {s}) == s);
  CHECK(initial_structure(X, L3, {}, {}) == generate(X, L3, {}, true));

  // universal property over sampled g into the initial structure
  for (int round = 0; round < 60; ++round) {
    auto Y1 = numbered_carrier(1 + g.below(3));
    auto Y2 = numbered_carrier(1 + g.below(3));
    auto Z = numbered_carrier(1 + g.below(3));
    const auto f1 = random_map(X, Y1, g);
    const auto f2 = random_map(X, Y2, g);
    const auto t1 = random_structure(Y1, L3, g, 2);
    const auto t2 = random_structure(Y2, L3, g, 2);
    const auto init = initial_structure(X, L3, {f1, f2}, {t1, t2});
    const auto h = random_map(Z, X, g);
    auto zs = random_structure(Z, L3, g, 2);
    if (g.below(2)) zs = join_structures({zs, initial_structure(Z, L3, {h}, {init})});
    CHECK(is_lcp(h, zs, init) == (is_lcp(compose(f1, h), zs, t1) && is_lcp(compose(f2, h), zs, t2)));
  }
}

TEST_CASE("final structures") {
  auto L3 = chain(3);
  auto X = numbered_carrier(3);
  Gen g(13);
  const auto s = random_structure(X, L3, g);
  CHECK(final_structure(X, L3, {identity_map(X)}, {s}) == s);
  auto one = numbered_carrier(1);
  CHECK(final_structure(one, L3, {CarrierMap(X, one, {0, 0, 0})}, {s}).size() == 3);

  auto L2 = chain(2);
  const auto z4 = cyclic_group(4);
  const auto z2 = cyclic_group(2);
  std::vector<FuzzySet> all;
  for (unsigned m = 0; m < 16; ++m) {
    all.push_back(values(z4.carrier(), L2, {AlgebraElement(m & 1), AlgebraElement((m >> 1) & 1),
                                            AlgebraElement((m >> 2) & 1), AlgebraElement((m >> 3) & 1)}));
  }
  const auto discrete = validate_structure(z4.carrier(), L2, all, true);
  const CarrierMap mod2(z4.carrier(), z2.carrier(), {0, 1, 0, 1});
  CHECK(final_structure(z2.carrier(), L2, {mod2}, {discrete}).size() == 4);
  try {
    final_structure(numbered_carrier(21), L2, {}, {}, 1u << 20);
    FAIL("expected GuardExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::GuardExceeded);
  }

  // universal property over sampled g out of the final structure
  for (int round = 0; round < 40; ++round) {
    auto S = numbered_carrier(1 + g.below(3));
    auto Z = numbered_carrier(1 + g.below(3));
    const auto f = random_map(S, X, g);
    const auto src = random_structure(S, L3, g, 2);
    const auto fin = final_structure(X, L3, {f}, {src});
    const auto h = random_map(X, Z, g);
    const auto zs = random_structure(Z, L3, g, 2);
    CHECK(is_lcp(h, fin, zs) == is_lcp(compose(h, f), src, zs));
  }
}

TEST_CASE("subspaces and quotients") {
  auto L2 = chain(2);
  auto X = numbered_carrier(2);
  Gen g(14);
  const auto s = random_structure(X, chain(3), g);
  CHECK(subspace(s, {0, 1}) == s);
  CHECK(quotient(s, identity_map(X)) == s);
  std::vector<FuzzySet> all = {values(X, L2, {0, 0}), values(X, L2, {0, 1}), values(X, L2, {1, 0}),
                               values(X, L2, {1, 1})};
  const auto discrete = validate_structure(X, L2, all, true);
  CHECK(member_values(subspace(discrete, {0})) == std::vector<Vals>{{0}, {1}});
  CHECK_THROWS_AS(subspace(discrete, {}), Error);
  CHECK_THROWS_AS(quotient(discrete, CarrierMap(X, numbered_carrier(3), {0, 1})), Error);
}

TEST_CASE("complement convex-to-convex maps") {
  auto L3 = chain(3);
  auto X = numbered_carrier(3);
  auto Y = numbered_carrier(2);
  Gen g(15);
  const auto s = random_structure(X, L3, g);
  CHECK(is_complement_ctc(identity_map(X), s, s));
  std::vector<FuzzySet> all;
  for (AlgebraElement a = 0; a < 3; ++a) {
    for (AlgebraElement b = 0; b < 3; ++b) all.push_back(values(Y, L3, {a, b}));
  }
  const auto discrete = validate_structure(Y, L3, all, true);
  CHECK(is_complement_ctc(random_map(X, Y, g), s, discrete));
}

TEST_CASE("pairing maps are LCP from stratified structures and can fail without stratification") {
  Gen g(16);
  const auto z3 = cyclic_group(3);
  auto L3 = chain(3);
  for (int round = 0; round < 20; ++round) {
    const auto c = random_structure(z3.carrier(), L3, g);
    const auto prod = product_structure(c, c);
    for (std::size_t x = 0; x < 3; ++x) CHECK(is_lcp(pair_with(z3, x), c, prod));
  }
  // non-stratified counterexample: the constant h appears as a preimage
  const auto bare = generate(z3.carrier(), L3, {values(z3.carrier(), L3, {1, 2, 2})}, false);
  const auto prod = product_structure(bare, bare);
  CHECK_FALSE(is_lcp(pair_with(z3, 0), bare, prod));
}

TEST_CASE("property: generate is idempotent, extensive and matches the meet-closure oracle") {
  Gen g(99);
  for (int round = 0; round < 150; ++round) {
    const auto L = algebras()[g.below(4)];
    auto X = numbered_carrier(1 + g.below(4));
    const bool strat = g.below(2) == 1;
    std::vector<FuzzySet> s;
    for (auto k = g.below(4); k > 0; --k) s.push_back(random_set(X, L, g));
    const auto c = generate(X, L, s, strat);
    CHECK(generate(X, L, c.members(), strat) == c);
    for (const auto& m : s) CHECK(c.contains(m));
    std::vector<Vals> seeds;
    if (strat) {
      for (std::size_t a = 0; a < L->size(); ++a) seeds.push_back(Vals(X->size(), AlgebraElement(a)));
    } else {
      seeds.push_back(Vals(X->size(), L->bot()));
      seeds.push_back(Vals(X->size(), L->top()));
    }
    for (const auto& m : s) seeds.push_back(m.values());
    CHECK(member_values(c) == closure(*L, seeds));
  }
}
