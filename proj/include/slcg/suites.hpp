#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "slcg/convex.hpp"
#include "slcg/oracle.hpp"

// Theorem suites over seeded instance catalogs, shared by the CLI and the
// acceptance binary. Each returns a JSON report with a top-level "holds".

namespace slcg::suites {

struct Options {
  std::uint64_t seed = 0;
  std::size_t cases = 100;
  bool exhaustive = false;
  std::uint64_t guard = kDefaultEnumGuard;
};

const std::vector<std::string>& theorem_names();
/// Throws UnknownRecipe for an unknown name.
nlohmann::json run_theorem(const std::string& name, const Options& options);

/// generate, rho or lcp against the brute-force oracles.
nlohmann::json oracle_compare(const std::string& what, const Options& options);

/// Sampled instances plus, in exhaustive mode, the indiscrete and
/// omega-of-convex-group structure for every catalog (group, algebra) pair.
std::vector<oracle::Instance> instances(const Options& options);

/// Verdicts for {a^} and for L^X on one group, both witness-backed, and the
/// discrepancy flag for L^X (claimed to be a convex group).
nlohmann::json adjudicate_examples(const oracle::NamedGroup& group, const oracle::NamedAlgebra& algebra,
                                   bool confirm_with_oracle);

}  // namespace slcg::suites
