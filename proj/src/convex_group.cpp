#include "slcg/convex_group.hpp"

#include "slcg/error.hpp"
#include "slcg/random.hpp"

namespace slcg {

namespace {

void require_on_group(const FiniteGroup& group, const ConvexStructure& structure) {
  if (!same_carrier(group.carrier(), structure.carrier_ptr())) {
    throw Error(ErrorKind::Mismatch, "structure does not live on the group's carrier");
  }
  if (!structure.stratified()) {
    throw Error(ErrorKind::NotStratified, "convex-group checks need a stratified structure");
  }
}

nlohmann::json lcp_witness(const char* map, const FuzzySet& member, const FuzzySet& pulled) {
  return {{"map", map}, {"member", value_labels(member)}, {"preimage", value_labels(pulled)}};
}

void require_slcg(const FiniteGroup& group, const ConvexStructure& structure) {
  auto report = is_slcg(group, structure);
  if (!report.holds) {
    throw Error(ErrorKind::NotAnSLCG, "the pair is not a stratified L-convex group", report.to_json());
  }
}

ConvexGroup asserted(ConvexGroup cg, const char* construction) {
  if (!cg.is_slcg()) {
    throw Error(ErrorKind::AssertionFailed, std::string(construction) + " produced a non-SLCG",
                cg.verified.to_json());
  }
  return cg;
}

}  // namespace

nlohmann::json CheckReport::to_json() const {
  nlohmann::json j;
  j["property"] = property;
  j["claim"] = claim;
  j["holds"] = holds;
  j["witness"] = witness;
  j["cases"] = cases;
  j["seed"] = seed;
  if (!details.is_null()) j["details"] = details;
  return j;
}

ConvexGroup make_convex_group(FiniteGroup group, ConvexStructure structure) {
  auto report = is_slcg(group, structure);
  return ConvexGroup{std::move(group), std::move(structure), std::move(report)};
}

CheckReport is_slcg(const FiniteGroup& group, const ConvexStructure& structure) {
  require_on_group(group, structure);
  CheckReport r;
  r.property = "slcg";
  r.claim = "multiplication and inversion are L-convexity-preserving";
  RectangleFamily square(structure, structure, group.square());
  const auto m = mul_map(group);
  const auto inv = inverse_map(group);
  bool m_ok = true;
  bool r_ok = true;
  for (const auto& member : structure.members()) {
    ++r.cases;
    const auto pulled = preimage(m, member);
    if (!square.contains(pulled)) {
      m_ok = false;
      r.fail(lcp_witness("m", member, pulled));
      break;
    }
  }
  for (const auto& member : structure.members()) {
    ++r.cases;
    const auto pulled = preimage(inv, member);
    if (!structure.contains(pulled)) {
      r_ok = false;
      r.fail(lcp_witness("r", member, pulled));
      break;
    }
  }
  r.details = {{"m_lcp", m_ok}, {"r_lcp", r_ok}};
  return r;
}

CheckReport is_slcg_via_k(const FiniteGroup& group, const ConvexStructure& structure) {
  require_on_group(group, structure);
  CheckReport r;
  r.property = "slcg-via-k";
  r.claim = "k(x,y) = xy^-1 is L-convexity-preserving";
  RectangleFamily square(structure, structure, group.square());
  const auto k = k_map(group);
  for (const auto& member : structure.members()) {
    ++r.cases;
    const auto pulled = preimage(k, member);
    if (!square.contains(pulled)) {
      r.fail(lcp_witness("k", member, pulled));
      break;
    }
  }
  return r;
}

CheckReport check_localization(const FiniteGroup& group, const ConvexStructure& structure, std::uint64_t seed,
                               std::size_t extra_samples) {
  require_on_group(group, structure);
  require_slcg(group, structure);
  CheckReport r;
  r.property = "localization";
  r.claim = "A in R_{x_a} iff T_{x^-1}.A in R_{e_a} iff A.T_{x^-1} in R_{e_a}";
  r.seed = seed;

  std::vector<FuzzySet> sets = structure.members();
  Rng rng(seed);
  for (std::size_t i = 0; i < extra_samples; ++i) {
    sets.push_back(random_fuzzy_set(structure.carrier_ptr(), structure.algebra_ptr(), rng));
  }
  const auto& L = structure.algebra();
  const auto e = group.identity();
  for (std::size_t x = 0; x < group.order() && r.holds; ++x) {
    const auto tx = characteristic(structure.carrier_ptr(), structure.algebra_ptr(), {group.inv(x)});
    for (const auto& a_set : sets) {
      const auto left = convolve(group, tx, a_set);
      const auto right = convolve(group, a_set, tx);
      for (auto a : L.coprime_elements()) {
        ++r.cases;
        const bool at_x = in_remote_nbhd(structure, x, a, a_set);
        const bool via_left = in_remote_nbhd(structure, e, a, left);
        const bool via_right = in_remote_nbhd(structure, e, a, right);
        if (at_x != via_left || at_x != via_right) {
          r.fail({{"x", group.carrier()->label(x)},
                  {"level", L.label(a)},
                  {"A", value_labels(a_set)},
                  {"in_R_x", at_x},
                  {"left_in_R_e", via_left},
                  {"right_in_R_e", via_right}});
          break;
        }
      }
      if (!r.holds) break;
    }
  }
  return r;
}

std::optional<nlohmann::json> odot_condition_violation(const FiniteGroup& group, const ConvexStructure& structure) {
  require_on_group(group, structure);
  const auto& L = structure.algebra();
  const auto& X = structure.carrier_ptr();
  const auto& alg = structure.algebra_ptr();
  const auto& members = structure.members();
  const std::size_t n = group.order();
  const auto& levels = L.coprime_elements();
  const auto top_inv = fuzzy_inverse(group, constant(X, alg, L.top()));
  const auto top = constant(X, alg, L.top());

  // U_B = B' . T^-1 and V_C = T . C'^-1 per member.
  std::vector<FuzzySet> u, v;
  for (const auto& m : members) {
    const auto mc = complement(m);
    u.push_back(convolve(group, mc, top_inv));
    v.push_back(convolve(group, top, fuzzy_inverse(group, mc)));
  }
  // remote[(z * |J| + level) * |C| + i]: member i in R_{z_level}
  std::vector<char> remote(n * levels.size() * members.size());
  for (std::size_t z = 0; z < n; ++z) {
    for (std::size_t l = 0; l < levels.size(); ++l) {
      for (std::size_t i = 0; i < members.size(); ++i) {
        remote[(z * levels.size() + l) * members.size() + i] = in_remote_nbhd(structure, z, levels[l], members[i]);
      }
    }
  }
  auto in_r = [&](std::size_t z, std::size_t l, std::size_t i) {
    return remote[(z * levels.size() + l) * members.size() + i] != 0;
  };

  for (std::size_t ai = 0; ai < members.size(); ++ai) {
    const auto a_comp = complement(members[ai]);
    std::vector<std::size_t> u_ok, v_ok;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (leq(u[i], a_comp)) u_ok.push_back(i);
      if (leq(v[i], a_comp)) v_ok.push_back(i);
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        const std::size_t z = group.mul(x, group.inv(y));
        for (std::size_t l = 0; l < levels.size(); ++l) {
          if (!in_r(z, l, ai)) continue;
          bool b_remote = false;
          for (auto i : u_ok) b_remote = b_remote || in_r(x, l, i);
          bool c_remote = false;
          for (auto i : v_ok) c_remote = c_remote || in_r(y, l, i);
          const bool holds = (b_remote && !v_ok.empty()) || (c_remote && !u_ok.empty());
          if (!holds) {
            return nlohmann::json{{"x", group.carrier()->label(x)},
                                  {"y", group.carrier()->label(y)},
                                  {"level", L.label(levels[l])},
                                  {"A", value_labels(members[ai])}};
          }
        }
      }
    }
  }
  return std::nullopt;
}

CheckReport check_odot_characterization(const FiniteGroup& group, const ConvexStructure& structure,
                                        std::uint64_t seed) {
  CheckReport r;
  r.property = "odot-characterization";
  r.claim = "SLCG iff (B'.T^-1) v (T.C'^-1) <= A' has a witness pair for every (x, y, a, A)";
  r.seed = seed;
  const auto slcg = is_slcg(group, structure);
  const auto violation = odot_condition_violation(group, structure);
  const bool condition = !violation.has_value();
  r.cases = structure.size() * group.order() * group.order() * structure.algebra().coprime_elements().size();
  r.details = {{"slcg", slcg.holds}, {"condition", condition}};
  if (violation) r.details["condition_witness"] = *violation;
  if (!slcg.holds) r.details["slcg_witness"] = slcg.witness;
  if (condition != slcg.holds) r.fail(r.details);
  return r;
}

CheckReport check_translations(const FiniteGroup& group, const ConvexStructure& structure) {
  require_on_group(group, structure);
  require_slcg(group, structure);
  CheckReport r;
  r.property = "translations";
  r.claim = "left and right translations are LCP bijections with LCP inverses";
  const auto id = identity_map(group.carrier());
  for (std::size_t x = 0; x < group.order() && r.holds; ++x) {
    const std::size_t xi = group.inv(x);
    const std::pair<const char*, std::pair<CarrierMap, CarrierMap>> sides[] = {
        {"left", {left_translation(group, x), left_translation(group, xi)}},
        {"right", {right_translation(group, x), right_translation(group, xi)}}};
    for (const auto& [side, maps] : sides) {
      ++r.cases;
      const auto& [fwd, back] = maps;
      const auto label = group.carrier()->label(x);
      if (!fwd.is_injective() || !fwd.is_surjective()) {
        r.fail({{"side", side}, {"x", label}, {"reason", "not a bijection"}});
      } else if (!(compose(fwd, back) == id) || !(compose(back, fwd) == id)) {
        r.fail({{"side", side}, {"x", label}, {"reason", "inverse translation is not the inverse"}});
      } else if (auto w = lcp_violation(fwd, structure, structure)) {
        r.fail({{"side", side}, {"x", label}, {"reason", "translation not LCP"}, {"member", value_labels(*w)}});
      } else if (auto w2 = lcp_violation(back, structure, structure)) {
        r.fail({{"side", side}, {"x", label}, {"reason", "inverse not LCP"}, {"member", value_labels(*w2)}});
      }
      if (!r.holds) break;
    }
  }
  return r;
}

ConvexGroup initial_group_structure(const FiniteGroup& source, const AlgebraPtr& algebra,
                                    const std::vector<GroupHom>& homs, const std::vector<ConvexGroup>& targets) {
  if (homs.size() != targets.size()) throw Error(ErrorKind::Mismatch, "one target convex group per hom required");
  std::vector<CarrierMap> maps;
  std::vector<ConvexStructure> structures;
  for (std::size_t j = 0; j < homs.size(); ++j) {
    if (!(homs[j].source == source) || !(homs[j].target == targets[j].group)) {
      throw Error(ErrorKind::Mismatch, "hom does not run from the source group to its target", {{"hom", j}});
    }
    validate_hom(homs[j].map, source, targets[j].group);
    if (!targets[j].is_slcg()) {
      throw Error(ErrorKind::NotAnSLCG, "initial lift needs convex-group targets", targets[j].verified.to_json());
    }
    maps.push_back(homs[j].map);
    structures.push_back(targets[j].structure);
  }
  auto structure = initial_structure(source.carrier(), algebra, maps, structures, true);
  return asserted(make_convex_group(source, std::move(structure)), "initial lift");
}

ConvexGroup final_group_structure(const FiniteGroup& target, const AlgebraPtr& algebra,
                                  const std::vector<GroupHom>& homs, const std::vector<ConvexGroup>& sources,
                                  std::uint64_t guard) {
  if (homs.size() != sources.size()) throw Error(ErrorKind::Mismatch, "one source convex group per hom required");
  std::vector<CarrierMap> maps;
  std::vector<ConvexStructure> structures;
  for (std::size_t j = 0; j < homs.size(); ++j) {
    if (!(homs[j].target == target) || !(homs[j].source == sources[j].group)) {
      throw Error(ErrorKind::Mismatch, "hom does not run from its source into the target group", {{"hom", j}});
    }
    validate_hom(homs[j].map, sources[j].group, target);
    if (!homs[j].map.is_surjective()) {
      throw Error(ErrorKind::NotSurjective, "final lift needs surjective homs", {{"hom", j}});
    }
    if (!sources[j].is_slcg()) {
      throw Error(ErrorKind::NotAnSLCG, "final lift needs convex-group sources", sources[j].verified.to_json());
    }
    maps.push_back(homs[j].map);
    structures.push_back(sources[j].structure);
  }
  auto structure = final_structure(target.carrier(), algebra, maps, structures, guard);
  for (std::size_t j = 0; j < maps.size(); ++j) {
    if (auto w = complement_ctc_violation(maps[j], structures[j], structure)) {
      throw Error(ErrorKind::HypothesisFailed, "hom is not complement L-convex-to-convex",
                  {{"hom", j}, {"member", value_labels(*w)}});
    }
  }
  return asserted(make_convex_group(target, std::move(structure)), "final lift");
}

ConvexGroup product_group(const ConvexGroup& lhs, const ConvexGroup& rhs) {
  auto group = direct_product(lhs.group, rhs.group);
  auto structure = product_structure(lhs.structure, rhs.structure);
  return asserted(make_convex_group(std::move(group), std::move(structure)), "product");
}

ConvexGroup join_group(const std::vector<ConvexGroup>& groups) {
  if (groups.empty()) throw Error(ErrorKind::Mismatch, "join of no convex groups");
  std::vector<ConvexStructure> structures;
  for (const auto& g : groups) {
    if (!(g.group == groups.front().group)) throw Error(ErrorKind::Mismatch, "joined convex groups differ in group");
    structures.push_back(g.structure);
  }
  return asserted(make_convex_group(groups.front().group, join_structures(structures)), "join");
}

ConvexGroup subgroup_space(const ConvexGroup& group, const std::vector<std::size_t>& subgroup) {
  auto sub = make_subgroup(group.group, subgroup);
  auto structure = initial_structure(sub.subgroup.carrier(), group.structure.algebra_ptr(), {sub.inclusion.map},
                                     {group.structure}, true);
  return asserted(make_convex_group(sub.subgroup, std::move(structure)), "subspace");
}

QuotientSpace quotient_group_space(const ConvexGroup& group, const std::vector<std::size_t>& normal,
                                   std::uint64_t guard) {
  auto q = quotient_group(group.group, normal);
  auto space = final_group_structure(q.quotient, group.structure.algebra_ptr(), {q.projection}, {group}, guard);
  CheckReport ctc;
  ctc.property = "complement-ctc";
  ctc.claim = "the natural map onto the quotient is complement L-convex-to-convex";
  ctc.cases = group.structure.size();
  if (auto w = complement_ctc_violation(q.projection.map, group.structure, space.structure)) {
    ctc.fail({{"member", value_labels(*w)}});
  }
  return QuotientSpace{std::move(space), std::move(q.projection), std::move(ctc)};
}

}  // namespace slcg
