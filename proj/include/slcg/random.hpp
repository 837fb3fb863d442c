#pragma once

#include <cstdint>
#include <random>

#include "slcg/fuzzy.hpp"

namespace slcg {

/// Seeded generator whose draws are identical on every platform
/// (std::mt19937_64 is fully specified; the distributions are not, so
/// bounded draws are done here).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish draw in [0, n); n must be positive.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  bool coin() { return (engine_() & 1u) != 0; }

 private:
  std::mt19937_64 engine_;
};

inline FuzzySet random_fuzzy_set(const CarrierPtr& carrier, const AlgebraPtr& algebra, Rng& rng) {
  std::vector<AlgebraElement> v(carrier->size());
  for (auto& x : v) x = static_cast<AlgebraElement>(rng.below(algebra->size()));
  return FuzzySet(carrier, algebra, std::move(v));
}

inline CarrierMap random_map(const CarrierPtr& source, const CarrierPtr& target, Rng& rng) {
  std::vector<std::size_t> t(source->size());
  for (auto& y : t) y = rng.below(target->size());
  return CarrierMap(source, target, std::move(t));
}

}  // namespace slcg
