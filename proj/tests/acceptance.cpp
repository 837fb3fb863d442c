// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "slcg/convex_group.hpp"
#include "slcg/functors.hpp"
#include "slcg/oracle.hpp"
#include "slcg/suites.hpp"
#include "support.hpp"

using namespace slcg;
using nlohmann::json;
using testing_support::Gen;
using testing_support::random_set;

namespace {

constexpr std::uint64_t kSeed = 20240601;

int failures = 0;

void verdict(int id, const std::string& name, bool ok, const std::string& detail) {
  std::printf("[%s] %2d %s: %s\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  std::fflush(stdout);
  failures += ok ? 0 : 1;
}

void guarded(int id, const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
  try {
    const auto [ok, detail] = body();
    verdict(id, name, ok, detail);
  } catch (const Error& e) {
    verdict(id, name, false, std::string(to_string(e.kind())) + ": " + e.what() + " " + e.witness().dump());
  } catch (const std::exception& e) {
    verdict(id, name, false, std::string("exception: ") + e.what());
  }
}

suites::Options options(std::size_t cases) {
  suites::Options o;
  o.seed = kSeed;
  o.cases = cases;
  o.exhaustive = true;
  return o;
}

std::string n(std::uint64_t v) { return std::to_string(v); }

// Every intersection-closed family on an n-set (n <= 4) holding the empty set and X.
std::vector<CrispConvexStructure> all_crisp(const CarrierPtr& X) {
  const std::size_t size = X->size();
  const CrispSet full = (CrispSet{1} << size) - 1;
  std::vector<CrispSet> proper;
  for (CrispSet s = 1; s < full; ++s) proper.push_back(s);
  std::vector<CrispConvexStructure> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << proper.size()); ++pick) {
    std::set<CrispSet> fam = {0, full};
    for (std::size_t i = 0; i < proper.size(); ++i) {
      if ((pick >> i) & 1u) fam.insert(proper[i]);
    }
    bool closed = true;
    for (auto a : fam) {
      for (auto b : fam) closed = closed && fam.count(a & b);
    }
    if (closed) out.push_back(validate_crisp_structure(X, std::vector<CrispSet>(fam.begin(), fam.end())));
  }
  return out;
}

// Every group table on {0..n-1} obtained by relabelling a catalog group of order <= 4.
std::vector<FiniteGroup> labelled_groups() {
  std::vector<FiniteGroup> out;
  std::set<std::vector<std::vector<int>>> seen;
  for (const auto& g : oracle::catalog_groups()) {
    const auto k = g.group.order();
    if (k > 4) continue;
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<std::vector<int>> table(k, std::vector<int>(k));
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) table[perm[a]][perm[b]] = static_cast<int>(perm[g.group.mul(a, b)]);
      }
      if (!seen.insert(table).second) continue;
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < k; ++i) labels.push_back(std::to_string(i));
      out.push_back(validate_group(labels, table));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

std::vector<std::vector<std::size_t>> subgroups(const FiniteGroup& G) {
  std::vector<std::vector<std::size_t>> out;
  for (CrispSet m = 1; m < (CrispSet{1} << G.order()); ++m) {
    const auto s = elements_of(m);
    if (is_subgroup(G, s)) out.push_back(s);
  }
  return out;
}

std::vector<oracle::Instance> slcg_instances() {
  std::vector<oracle::Instance> out;
  for (auto& inst : suites::instances(options(100))) {
    if (is_slcg(inst.group, inst.structure).holds) out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace

int main() {
  guarded(1, "definition equivalence (m,r LCP iff k LCP)", [] {
    const auto r = suites::run_theorem("k-char", options(100));
    const auto s = r["details"]["slcg"].get<std::uint64_t>();
    const auto ns = r["details"]["non_slcg"].get<std::uint64_t>();
    const bool ok = r["holds"].get<bool>() && r["cases"].get<std::uint64_t>() >= 100 && s > 0 && ns > 0;
    return std::pair{ok, n(r["cases"]) + " instances, " + n(s) + " slcg, " + n(ns) + " not, disagreements " +
                             (r["holds"].get<bool>() ? "0" : r["witness"].dump())};
  });

  guarded(2, "remote-neighborhood LCP criterion", [] {
    const auto r = suites::run_theorem("remote-lcp", options(240));
    const bool ok = r["holds"].get<bool>() && r["cases"].get<std::uint64_t>() >= 200;
    return std::pair{ok, n(r["cases"]) + " cases, lcp " + n(r["details"]["lcp"]) + ", non-lcp " +
                             n(r["details"]["non_lcp"])};
  });

  guarded(3, "localization at the identity", [] {
    const auto r = suites::run_theorem("localization", options(100));
    const bool ok = r["holds"].get<bool>() && r["cases"].get<std::uint64_t>() > 0;
    return std::pair{ok, n(r["cases"]) + " slcg instances, " + n(r["details"]["checked_triples"]) +
                             " (x, a, A) triples, 50 random A per instance"};
  });

  guarded(4, "convolution characterization biconditional", [] {
    const auto r = suites::run_theorem("odot-char", options(100));
    const auto bf = r["details"]["both_false"].get<std::uint64_t>();
    const bool ok = r["holds"].get<bool>() && bf >= 10;
    return std::pair{ok, n(r["cases"]) + " instances, both true " + n(r["details"]["both_true"]) +
                             ", both false " + n(bf)};
  });

  guarded(5, "adjunction (rho.omega = id, omega.rho <= id)", [] {
    std::size_t cgs = 0, left_inverse = 0;
    bool ok = true;
    std::string bad;
    for (const auto& G : labelled_groups()) {
      const auto X = G.carrier();
      const auto family = X->size() <= 3 ? oracle::enumerate_crisp_structures(X) : all_crisp(X);
      for (const auto& c : family) {
        if (!is_cg(G, c).holds) continue;
        ++cgs;
        for (const auto& l : oracle::catalog_algebras()) {
          const auto r = check_left_inverse(G, c, l.algebra);
          ++left_inverse;
          if (!r.holds && ok) {
            ok = false;
            bad = r.to_json().dump();
          }
        }
      }
    }
    std::size_t counit = 0;
    for (const auto& inst : slcg_instances()) {
      const auto r = rho(inst.group, inst.structure);
      const auto back = omega(r, inst.structure.algebra_ptr());
      for (const auto& m : back.members()) {
        if (!inst.structure.contains(m) && ok) {
          ok = false;
          bad = inst.describe().dump();
        }
      }
      ++counit;
    }
    ok = ok && left_inverse >= 50 && counit >= 50;
    return std::pair{ok, n(cgs) + " crisp convex groups (all of them on labelled groups of order <= 4) x " +
                             n(oracle::catalog_algebras().size()) + " algebras = " + n(left_inverse) +
                             " left-inverse checks; counit on " + n(counit) + " slcg instances" +
                             (bad.empty() ? "" : " " + bad)};
  });

  guarded(6, "oracle equivalence (generate, rho)", [] {
    Gen g(kSeed);
    const auto algebras = oracle::catalog_algebras();
    std::size_t gen_cases = 0;
    bool ok = true;
    for (int round = 0; round < 150; ++round) {
      auto X = numbered_carrier(1 + g.below(4));
      const auto& L = algebras[g.below(algebras.size())].algebra;
      std::vector<FuzzySet> s;
      for (auto k = g.below(6); k > 0; --k) s.push_back(random_set(X, L, g));
      const bool strat = g.below(2);
      ok = ok && oracle::naive_generate(X, L, s, strat) == generate(X, L, s, strat);
      ++gen_cases;
    }
    std::size_t rho_cases = 0;
    for (const auto& inst : suites::instances(options(100))) {
      if (inst.group.order() > 3 || !inst.structure.stratified()) continue;
      ok = ok && rho(inst.group, inst.structure) == oracle::rho_by_enumeration(inst.group, inst.structure);
      ++rho_cases;
    }
    ok = ok && gen_cases >= 100 && rho_cases > 0;
    return std::pair{ok, n(gen_cases) + " generate comparisons, " + n(rho_cases) + " rho comparisons"};
  });

  guarded(7, "construction soundness", [] {
    std::size_t outputs = 0, ctc = 0;
    bool ok = true;
    std::string bad;
    auto check = [&](const ConvexGroup& cg, const std::string& what) {
      ++outputs;
      if (!is_slcg(cg.group, cg.structure).holds && ok) {
        ok = false;
        bad = what;
      }
    };
    const auto pool = slcg_instances();
    std::map<std::string, std::size_t> seen_pairs;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      const auto& inst = pool[i];
      const auto key = inst.group_name + "/" + inst.algebra_name;
      if (seen_pairs[key]++ >= 2) continue;
      const auto cg = make_convex_group(inst.group, inst.structure);
      const auto& L = inst.structure.algebra_ptr();
      for (const auto& h : subgroups(inst.group)) {
        check(subgroup_space(cg, h), "subspace " + key);
        if (!is_normal_subgroup(inst.group, h)) continue;
        const auto q = quotient_group_space(cg, h);
        check(q.space, "quotient " + key);
        ++ctc;
        if (!q.complement_ctc.holds && ok) {
          ok = false;
          bad = "complement-ctc " + key;
        }
        check(initial_group_structure(inst.group, L, {q.projection}, {q.space}), "initial " + key);
        check(final_group_structure(q.space.group, L, {q.projection}, {cg}), "final " + key);
      }
      check(join_group({cg, cg}), "join " + key);
      for (std::size_t j = i + 1; j < pool.size(); ++j) {
        if (pool[j].algebra_name != inst.algebra_name || pool[j].group.order() * inst.group.order() > 12) continue;
        check(product_group(cg, make_convex_group(pool[j].group, pool[j].structure)), "product " + key);
        if (pool[j].group == inst.group) {
          check(join_group({cg, make_convex_group(pool[j].group, pool[j].structure)}), "join " + key);
        }
        break;
      }
    }
    ok = ok && outputs > 0 && ctc > 0;
    return std::pair{ok, n(outputs) + " constructed convex groups, " + n(ctc) + " quotient maps complement-ctc" +
                             (bad.empty() ? "" : ", failed: " + bad)};
  });

  guarded(8, "product equals initial structure of projections", [] {
    Gen g(kSeed + 8);
    const auto algebras = oracle::catalog_algebras();
    std::size_t cases = 0;
    bool ok = true;
    for (; cases < 60; ++cases) {
      auto X = numbered_carrier(1 + g.below(4));
      auto Y = numbered_carrier(1 + g.below(4));
      const auto& L = algebras[g.below(algebras.size())].algebra;
      std::vector<FuzzySet> sx, sy;
      for (auto k = g.below(3); k > 0; --k) sx.push_back(random_set(X, L, g));
      for (auto k = g.below(3); k > 0; --k) sy.push_back(random_set(Y, L, g));
      const auto A = generate(X, L, sx, true);
      const auto B = generate(Y, L, sy, true);
      const auto P = product_carrier(X, Y);
      std::vector<FuzzySet> rect;
      for (const auto& a : A.members()) {
        for (const auto& b : B.members()) {
          std::vector<AlgebraElement> v;
          for (std::size_t x = 0; x < X->size(); ++x) {
            for (std::size_t y = 0; y < Y->size(); ++y) v.push_back(L->meet(a.values()[x], b.values()[y]));
          }
          rect.emplace_back(P, L, v);
        }
      }
      const auto init = initial_structure(P, L, {first_projection(P, X, Y), second_projection(P, X, Y)}, {A, B});
      std::set<std::vector<AlgebraElement>> want, got, lib;
      for (const auto& r : rect) want.insert(r.values());
      for (const auto& m : init.members()) got.insert(m.values());
      const auto prod = product_structure(A, B);
      for (const auto& m : prod.members()) lib.insert(m.values());
      ok = ok && want == got && got == lib;
    }
    return std::pair{ok && cases >= 50, n(cases) + " random pairs"};
  });

  guarded(9, "fuzzy-calculus lemmas", [] {
    Gen g(kSeed + 9);
    std::size_t groups = 0, sets = 0, checks = 0;
    bool ok = true;
    auto expect = [&](bool b) {
      ++checks;
      ok = ok && b;
    };
    for (const auto& ng : oracle::catalog_groups()) {
      const auto& G = ng.group;
      if (G.order() > 4) continue;
      ++groups;
      for (const auto& nl : oracle::catalog_algebras()) {
        const auto& L = nl.algebra;
        const auto X = G.carrier();
        const auto mul = mul_map(G);
        for (int round = 0; round < 100; ++round) {
          ++sets;
          const auto A = random_set(X, L, g);
          const auto B = random_set(X, L, g);
          expect(convolve(G, characteristic(X, L, {G.identity()}), A) == A);
          for (std::size_t x = 0; x < G.order(); ++x) {
            expect(convolve(G, characteristic(X, L, {x}), A) == image(left_translation(G, x), A));
          }
          const auto AB = product_set(G.square(), A, B);
          expect(image(k_map(G), AB) == convolve(G, A, fuzzy_inverse(G, B)));
          const auto C = random_set(G.square(), L, g);
          expect(leq(image(mul, C), A) == leq(C, preimage(mul, A)));
          expect(leq(image(mul, AB), A) == leq(AB, preimage(mul, A)));
        }
      }
    }
    ok = ok && sets >= 100;
    return std::pair{ok, n(groups) + " groups of order <= 4, " + n(sets) + " sampled set pairs, " + n(checks) +
                             " identities checked"};
  });

  guarded(10, "degeneration at the two-element chain", [] {
    Gen g(kSeed + 10);
    std::size_t pairs = 0, cg = 0, sampled = 0;
    bool ok = true;
    for (const auto& ng : oracle::catalog_groups()) {
      const auto X = ng.group.carrier();
      std::vector<CrispConvexStructure> family;
      if (X->size() <= 4) {
        family = all_crisp(X);
      } else {
        for (int round = 0; round < 200; ++round) {
          std::vector<CrispSet> s;
          for (auto k = g.below(4); k > 0; --k) s.push_back(g.next() & full_set(X->size()));
          family.push_back(crisp_generate(X, s));
        }
        sampled += family.size();
      }
      for (const auto& c : family) {
        const bool a = is_cg(ng.group, c).holds;
        ok = ok && a == is_slcg(ng.group, to_fuzzy(c)).holds;
        ++pairs;
        cg += a ? 1 : 0;
      }
    }
    return std::pair{ok, n(pairs) + " (group, crisp structure) pairs, all of them for order <= 4 and " + n(sampled) +
                             " sampled for orders 5 and 6; " + n(cg) + " convex groups"};
  });

  guarded(11, "example adjudication", [] {
    std::size_t verdicts = 0, discrepancies = 0;
    std::set<std::string> covered;
    bool ok = true;
    for (const auto& ng : oracle::catalog_groups()) {
      for (const auto& nl : oracle::catalog_algebras()) {
        if (fuzzy_powerset_size(nl.algebra->size(), ng.group.order()) > 4096) continue;
        const auto v = suites::adjudicate_examples(ng, nl, true);
        ++verdicts;
        covered.insert(ng.name);
        const bool ind = v["indiscrete"]["verdict"].get<bool>();
        const bool full = v["full"]["verdict"].get<bool>();
        ok = ok && ind && v.value("oracle_confirmed", false);
        if (!full) {
          ++discrepancies;
          ok = ok && !v["full"]["report"]["witness"].is_null() && v["full"]["discrepancy"].get<bool>();
        }
      }
    }
    ok = ok && covered.size() == oracle::catalog_groups().size();
    return std::pair{ok, n(verdicts) + " (group, algebra) verdicts over " + n(covered.size()) +
                             " groups, indiscrete always slcg, L^X refuted with witness in " + n(discrepancies) +
                             " (oracle-confirmed)"};
  });

  guarded(12, "determinism", [] {
    std::size_t runs = 0;
    bool ok = true;
    for (const auto& name : suites::theorem_names()) {
      ok = ok && suites::run_theorem(name, options(40)).dump(2) == suites::run_theorem(name, options(40)).dump(2);
      ++runs;
    }
    for (const auto& what : {"generate", "rho", "lcp"}) {
      ok = ok && suites::oracle_compare(what, options(40)).dump(2) == suites::oracle_compare(what, options(40)).dump(2);
      ++runs;
    }
    return std::pair{ok, n(runs) + " suites rerun, byte-identical"};
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
