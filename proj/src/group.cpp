#include "slcg/group.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "slcg/error.hpp"

namespace slcg {

namespace {

std::vector<std::size_t> normalized(std::vector<std::size_t> subset, std::size_t n) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  for (auto x : subset) {
    if (x >= n) throw Error(ErrorKind::UnknownElement, "subset index outside the group", {{"index", x}});
  }
  return subset;
}

}  // namespace

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> t(n_, std::vector<int>(n_));
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) t[a][b] = static_cast<int>(mul(a, b));
  }
  return t;
}

FiniteGroup validate_group(const std::vector<std::string>& labels, const std::vector<std::vector<int>>& mul) {
  const std::size_t n = labels.size();
  FiniteGroup g;
  g.carrier_ = make_carrier(labels);
  if (mul.size() != n) throw Error(ErrorKind::MalformedTable, "mul table has wrong row count");
  g.n_ = n;
  g.mul_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (mul[a].size() != n) throw Error(ErrorKind::MalformedTable, "mul table row has wrong length", {{"row", a}});
    for (std::size_t b = 0; b < n; ++b) {
      const int v = mul[a][b];
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw Error(ErrorKind::MalformedTable, "mul entry out of range", {{"row", a}, {"col", b}});
      }
      g.mul_[a * n + b] = static_cast<std::size_t>(v);
    }
  }

  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = g.mul(e, x) == x && g.mul(x, e) == x;
    if (ok) {
      g.identity_ = e;
      found = true;
    }
  }
  if (!found) throw Error(ErrorKind::NoIdentity, "no two-sided identity element");

  g.inv_.assign(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (g.mul(x, y) == g.identity_ && g.mul(y, x) == g.identity_) {
        g.inv_[x] = y;
        break;
      }
    }
    if (g.inv_[x] == n) {
      throw Error(ErrorKind::NoInverse, "element has no two-sided inverse", {{"element", labels[x]}});
    }
  }

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
          throw Error(ErrorKind::NonAssociative, "(ab)c != a(bc)",
                      {{"a", labels[a]}, {"b", labels[b]}, {"c", labels[c]}});
        }
      }
    }
  }
  g.square_ = product_carrier(g.carrier_, g.carrier_);
  return g;
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n < 1) throw Error(ErrorKind::SizeOutOfRange, "cyclic group needs n >= 1");
  std::vector<std::string> labels;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<int>((a + b) % n);
  }
  return validate_group(labels, t);
}

FiniteGroup klein_four() {
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) t[a][b] = a ^ b;
  }
  return validate_group({"e", "a", "b", "c"}, t);
}

FiniteGroup symmetric_group3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::string> labels;
  for (const auto& q : perms) labels.push_back(std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]));
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return validate_group(labels, t);
}

FiniteGroup direct_product(const FiniteGroup& lhs, const FiniteGroup& rhs) {
  const std::size_t n1 = lhs.order();
  const std::size_t n2 = rhs.order();
  const auto carrier = product_carrier(lhs.carrier(), rhs.carrier());
  std::vector<std::vector<int>> t(n1 * n2, std::vector<int>(n1 * n2));
  for (std::size_t a = 0; a < n1 * n2; ++a) {
    for (std::size_t b = 0; b < n1 * n2; ++b) {
      t[a][b] = static_cast<int>(lhs.mul(a / n2, b / n2) * n2 + rhs.mul(a % n2, b % n2));
    }
  }
  return validate_group(carrier->labels(), t);
}

std::size_t element_order(const FiniteGroup& group, std::size_t x) {
  std::size_t k = 1;
  for (std::size_t y = x; y != group.identity(); y = group.mul(y, x)) ++k;
  return k;
}

GroupHom validate_hom(CarrierMap map, const FiniteGroup& source, const FiniteGroup& target) {
  if (!same_carrier(map.source(), source.carrier()) || !same_carrier(map.target(), target.carrier())) {
    throw Error(ErrorKind::CarrierMismatch, "homomorphism carriers differ from its groups");
  }
  const auto& sl = source.carrier()->labels();
  for (std::size_t u = 0; u < source.order(); ++u) {
    if (map(source.inv(u)) != target.inv(map(u))) {
      throw Error(ErrorKind::NotAHomomorphism, "f(u^-1) != f(u)^-1", {{"u", sl[u]}});
    }
    for (std::size_t v = 0; v < source.order(); ++v) {
      if (map(source.mul(u, v)) != target.mul(map(u), map(v))) {
        throw Error(ErrorKind::NotAHomomorphism, "f(uv) != f(u)f(v)", {{"u", sl[u]}, {"v", sl[v]}});
      }
    }
  }
  return GroupHom{std::move(map), source, target};
}

GroupHom identity_hom(const FiniteGroup& group) {
  return GroupHom{identity_map(group.carrier()), group, group};
}

CarrierMap left_translation(const FiniteGroup& group, std::size_t x) {
  if (x >= group.order()) throw Error(ErrorKind::UnknownElement, "translation by unknown element");
  std::vector<std::size_t> t(group.order());
  for (std::size_t u = 0; u < t.size(); ++u) t[u] = group.mul(x, u);
  return CarrierMap(group.carrier(), group.carrier(), std::move(t));
}

CarrierMap right_translation(const FiniteGroup& group, std::size_t x) {
  if (x >= group.order()) throw Error(ErrorKind::UnknownElement, "translation by unknown element");
  std::vector<std::size_t> t(group.order());
  for (std::size_t u = 0; u < t.size(); ++u) t[u] = group.mul(u, x);
  return CarrierMap(group.carrier(), group.carrier(), std::move(t));
}

CarrierMap pair_with(const FiniteGroup& group, std::size_t x) {
  if (x >= group.order()) throw Error(ErrorKind::UnknownElement, "pairing with unknown element");
  std::vector<std::size_t> t(group.order());
  for (std::size_t u = 0; u < t.size(); ++u) t[u] = x * group.order() + u;
  return CarrierMap(group.carrier(), group.square(), std::move(t));
}

CarrierMap mul_map(const FiniteGroup& group) {
  const std::size_t n = group.order();
  std::vector<std::size_t> t(n * n);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = group.mul(i / n, i % n);
  return CarrierMap(group.square(), group.carrier(), std::move(t));
}

CarrierMap inverse_map(const FiniteGroup& group) {
  std::vector<std::size_t> t(group.order());
  for (std::size_t u = 0; u < t.size(); ++u) t[u] = group.inv(u);
  return CarrierMap(group.carrier(), group.carrier(), std::move(t));
}

CarrierMap k_map(const FiniteGroup& group) {
  const std::size_t n = group.order();
  std::vector<std::size_t> t(n * n);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = group.mul(i / n, group.inv(i % n));
  return CarrierMap(group.square(), group.carrier(), std::move(t));
}

FuzzySet convolve(const FiniteGroup& group, const FuzzySet& lhs, const FuzzySet& rhs) {
  require_compatible(lhs, rhs);
  if (!same_carrier(lhs.carrier_ptr(), group.carrier())) {
    throw Error(ErrorKind::CarrierMismatch, "convolution operands must live on the group");
  }
  const auto& L = lhs.algebra();
  const std::size_t n = group.order();
  std::vector<AlgebraElement> v(n, L.bot());
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t u = group.mul(x, y);
      v[u] = L.join(v[u], L.meet(lhs[x], rhs[y]));
    }
  }
  return FuzzySet(lhs.carrier_ptr(), lhs.algebra_ptr(), std::move(v));
}

FuzzySet fuzzy_inverse(const FiniteGroup& group, const FuzzySet& set) {
  if (!same_carrier(set.carrier_ptr(), group.carrier())) {
    throw Error(ErrorKind::CarrierMismatch, "inverse of a set not on the group");
  }
  std::vector<AlgebraElement> v(set.size());
  for (std::size_t u = 0; u < v.size(); ++u) v[u] = set[group.inv(u)];
  return FuzzySet(set.carrier_ptr(), set.algebra_ptr(), std::move(v));
}

bool is_subgroup(const FiniteGroup& group, const std::vector<std::size_t>& subset) {
  const auto s = normalized(subset, group.order());
  if (s.empty()) return false;
  std::vector<bool> in(group.order(), false);
  for (auto x : s) in[x] = true;
  for (auto x : s) {
    if (!in[group.inv(x)]) return false;
    for (auto y : s) {
      if (!in[group.mul(x, y)]) return false;
    }
  }
  return true;
}

bool is_normal_subgroup(const FiniteGroup& group, const std::vector<std::size_t>& subset) {
  if (!is_subgroup(group, subset)) return false;
  std::vector<bool> in(group.order(), false);
  for (auto x : subset) in[x] = true;
  for (std::size_t x = 0; x < group.order(); ++x) {
    for (auto n : subset) {
      if (!in[group.mul(group.mul(x, n), group.inv(x))]) return false;
    }
  }
  return true;
}

SubgroupResult make_subgroup(const FiniteGroup& group, const std::vector<std::size_t>& subset) {
  const auto s = normalized(subset, group.order());
  if (!is_subgroup(group, s)) throw Error(ErrorKind::NotSubgroup, "subset is not a subgroup");
  std::vector<std::size_t> position(group.order(), 0);
  for (std::size_t i = 0; i < s.size(); ++i) position[s[i]] = i;
  std::vector<std::string> labels;
  for (auto x : s) labels.push_back(group.carrier()->label(x));
  std::vector<std::vector<int>> t(s.size(), std::vector<int>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) t[i][j] = static_cast<int>(position[group.mul(s[i], s[j])]);
  }
  auto sub = validate_group(labels, t);
  CarrierMap incl(sub.carrier(), group.carrier(), s);
  auto hom = validate_hom(std::move(incl), sub, group);
  return SubgroupResult{std::move(sub), std::move(hom)};
}

QuotientResult quotient_group(const FiniteGroup& group, const std::vector<std::size_t>& normal) {
  const auto s = normalized(normal, group.order());
  if (!is_subgroup(group, s)) throw Error(ErrorKind::NotSubgroup, "subset is not a subgroup");
  if (!is_normal_subgroup(group, s)) throw Error(ErrorKind::NotNormal, "subgroup is not normal");

  const std::size_t n = group.order();
  std::vector<std::size_t> coset_of(n, n);
  std::vector<std::vector<std::size_t>> cosets;
  for (std::size_t z = 0; z < n; ++z) {
    if (coset_of[z] != n) continue;
    std::vector<std::size_t> members;
    for (auto m : s) members.push_back(group.mul(z, m));
    std::sort(members.begin(), members.end());
    for (auto m : members) coset_of[m] = cosets.size();
    cosets.push_back(std::move(members));
  }
  std::vector<std::string> labels;
  for (const auto& c : cosets) {
    std::string label = "{";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) label += ",";
      label += group.carrier()->label(c[i]);
    }
    labels.push_back(label + "}");
  }
  const std::size_t k = cosets.size();
  std::vector<std::vector<int>> t(k, std::vector<int>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      t[i][j] = static_cast<int>(coset_of[group.mul(cosets[i][0], cosets[j][0])]);
    }
  }
  auto quotient = validate_group(labels, t);
  CarrierMap q(group.carrier(), quotient.carrier(), coset_of);
  auto hom = validate_hom(std::move(q), group, quotient);
  return QuotientResult{std::move(quotient), std::move(hom)};
}

}  // namespace slcg
