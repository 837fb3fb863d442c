#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "slcg/algebra.hpp"
#include "slcg/fuzzy.hpp"

namespace testing_support {

// SplitMix64, kept separate from the library's generator on purpose.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }

 private:
  std::uint64_t state_;
};

inline slcg::FuzzySet random_set(const slcg::CarrierPtr& X, const slcg::AlgebraPtr& L, Gen& g) {
  std::vector<slcg::AlgebraElement> v(X->size());
  for (auto& x : v) x = static_cast<slcg::AlgebraElement>(g.below(L->size()));
  return slcg::FuzzySet(X, L, v);
}

inline slcg::CarrierMap random_map(const slcg::CarrierPtr& X, const slcg::CarrierPtr& Y, Gen& g) {
  std::vector<std::size_t> t(X->size());
  for (auto& y : t) y = g.below(Y->size());
  return slcg::CarrierMap(X, Y, t);
}

inline slcg::FuzzySet values(const slcg::CarrierPtr& X, const slcg::AlgebraPtr& L,
                             std::vector<slcg::AlgebraElement> v) {
  return slcg::FuzzySet(X, L, std::move(v));
}

// Meet closure by repeated sweeps over raw vectors.
inline std::vector<std::vector<slcg::AlgebraElement>> closure(const slcg::DeMorganAlgebra& L,
                                                              std::vector<std::vector<slcg::AlgebraElement>> fam) {
  for (bool grew = true; grew;) {
    grew = false;
    const auto n = fam.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<slcg::AlgebraElement> m(fam[i].size());
        for (std::size_t k = 0; k < m.size(); ++k) m[k] = L.meet(fam[i][k], fam[j][k]);
        bool seen = false;
        for (const auto& f : fam) seen = seen || f == m;
        if (!seen) {
          fam.push_back(m);
          grew = true;
        }
      }
    }
  }
  std::sort(fam.begin(), fam.end());
  fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
  return fam;
}

}  // namespace testing_support
