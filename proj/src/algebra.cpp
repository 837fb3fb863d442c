#include "slcg/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "slcg/error.hpp"

namespace slcg {

namespace {

void require_table(const std::vector<std::vector<int>>& table, std::size_t n, const char* name) {
  if (table.size() != n) {
    throw Error(ErrorKind::MalformedTable, std::string(name) + " table has wrong row count",
                {{"table", name}, {"rows", table.size()}, {"expected", n}});
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      throw Error(ErrorKind::MalformedTable, std::string(name) + " table row has wrong length",
                  {{"table", name}, {"row", i}});
    }
    for (int v : table[i]) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw Error(ErrorKind::MalformedTable, std::string(name) + " table entry out of range",
                    {{"table", name}, {"row", i}, {"value", v}});
      }
    }
  }
}

// Collects the first witness per law, preserving discovery order.
class ViolationLog {
 public:
  void add(const std::string& kind, const std::string& law, std::vector<int> witness) {
    if (seen_.insert(law).second) out_.push_back({kind, law, std::move(witness)});
  }
  std::vector<AlgebraViolation> take() { return std::move(out_); }

 private:
  std::set<std::string> seen_;
  std::vector<AlgebraViolation> out_;
};

}  // namespace

AlgebraElement DeMorganAlgebra::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw Error(ErrorKind::UnknownElement, "no algebra element labelled '" + label + "'",
                {{"label", label}});
  }
  return static_cast<AlgebraElement>(it - labels_.begin());
}

RawAlgebra DeMorganAlgebra::raw() const {
  RawAlgebra r;
  r.labels = labels_;
  r.meet.assign(n_, std::vector<int>(n_));
  r.join.assign(n_, std::vector<int>(n_));
  r.neg.resize(n_);
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) {
      r.meet[a][b] = meet_[a * n_ + b];
      r.join[a][b] = join_[a * n_ + b];
    }
    r.neg[a] = neg_[a];
  }
  r.top = top_;
  r.bot = bot_;
  return r;
}

bool operator==(const DeMorganAlgebra& lhs, const DeMorganAlgebra& rhs) {
  return lhs.labels_ == rhs.labels_ && lhs.meet_ == rhs.meet_ && lhs.join_ == rhs.join_ &&
         lhs.neg_ == rhs.neg_ && lhs.top_ == rhs.top_ && lhs.bot_ == rhs.bot_;
}

bool same_algebra(const AlgebraPtr& lhs, const AlgebraPtr& rhs) {
  if (lhs == rhs) return true;
  if (!lhs || !rhs) return false;
  return *lhs == *rhs;
}

std::vector<AlgebraViolation> check_algebra(const RawAlgebra& raw) {
  const std::size_t n = raw.labels.size();
  if (n == 0 || n > kMaxAlgebraSize) {
    throw Error(ErrorKind::SizeOutOfRange, "algebra must have between 1 and 255 elements",
                {{"size", n}});
  }
  require_table(raw.meet, n, "meet");
  require_table(raw.join, n, "join");
  if (raw.neg.size() != n) {
    throw Error(ErrorKind::MalformedTable, "neg table has wrong length", {{"table", "neg"}});
  }
  for (int v : raw.neg) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) {
      throw Error(ErrorKind::MalformedTable, "neg entry out of range", {{"value", v}});
    }
  }
  auto in_range = [n](int v) { return v >= 0 && static_cast<std::size_t>(v) < n; };
  if (!in_range(raw.top) || !in_range(raw.bot)) {
    throw Error(ErrorKind::MalformedTable, "top/bot index out of range",
                {{"top", raw.top}, {"bot", raw.bot}});
  }

  ViolationLog log;
  const int sz = static_cast<int>(n);
  auto m = [&](int a, int b) { return raw.meet[a][b]; };
  auto j = [&](int a, int b) { return raw.join[a][b]; };
  auto ng = [&](int a) { return raw.neg[a]; };

  std::map<std::string, int> first_index;
  for (int i = 0; i < sz; ++i) {
    auto [it, fresh] = first_index.emplace(raw.labels[i], i);
    if (!fresh) log.add("DuplicateLabel", "distinct labels", {it->second, i});
  }

  for (int a = 0; a < sz; ++a) {
    if (m(a, a) != a) log.add("NonLattice", "meet idempotent", {a});
    if (j(a, a) != a) log.add("NonLattice", "join idempotent", {a});
    if (m(raw.top, a) != a) log.add("NonLattice", "top is meet identity", {a});
    if (j(raw.bot, a) != a) log.add("NonLattice", "bot is join identity", {a});
    if (ng(ng(a)) != a) log.add("BadNegation", "involution", {a});
    for (int b = 0; b < sz; ++b) {
      if (m(a, b) != m(b, a)) log.add("NonLattice", "meet commutative", {a, b});
      if (j(a, b) != j(b, a)) log.add("NonLattice", "join commutative", {a, b});
      if (m(a, j(a, b)) != a) log.add("NonLattice", "absorption a^(avb)=a", {a, b});
      if (j(a, m(a, b)) != a) log.add("NonLattice", "absorption av(a^b)=a", {a, b});
      if ((m(a, b) == a) != (j(a, b) == b)) log.add("NonLattice", "order consistency", {a, b});
      if (ng(j(a, b)) != m(ng(a), ng(b))) log.add("BadNegation", "neg(avb)=neg a ^ neg b", {a, b});
      if (m(a, b) == a && m(ng(b), ng(a)) != ng(b)) log.add("BadNegation", "order reversing", {a, b});
      for (int c = 0; c < sz; ++c) {
        if (m(a, m(b, c)) != m(m(a, b), c)) log.add("NonLattice", "meet associative", {a, b, c});
        if (j(a, j(b, c)) != j(j(a, b), c)) log.add("NonLattice", "join associative", {a, b, c});
        if (m(a, j(b, c)) != j(m(a, b), m(a, c))) log.add("NonDistributive", "distributivity", {a, b, c});
      }
    }
  }
  return log.take();
}

AlgebraPtr validate_algebra(const RawAlgebra& raw) {
  auto violations = check_algebra(raw);
  if (!violations.empty()) {
    nlohmann::json report = nlohmann::json::array();
    for (const auto& v : violations) {
      report.push_back({{"kind", v.kind}, {"law", v.law}, {"witness", v.witness}});
    }
    ErrorKind kind = ErrorKind::NonLattice;
    const auto& first = violations.front().kind;
    if (first == "DuplicateLabel") kind = ErrorKind::DuplicateLabel;
    else if (first == "NonDistributive") kind = ErrorKind::NonDistributive;
    else if (first == "BadNegation") kind = ErrorKind::BadNegation;
    throw Error(kind, "invalid De Morgan algebra: " + violations.front().law,
                {{"violations", report},
                 {"note", "complete distributivity is implied by finite distributivity"}});
  }

  const std::size_t n = raw.labels.size();
  std::shared_ptr<DeMorganAlgebra> alg(new DeMorganAlgebra());
  alg->n_ = n;
  alg->labels_ = raw.labels;
  alg->meet_.resize(n * n);
  alg->join_.resize(n * n);
  alg->neg_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      alg->meet_[a * n + b] = static_cast<AlgebraElement>(raw.meet[a][b]);
      alg->join_[a * n + b] = static_cast<AlgebraElement>(raw.join[a][b]);
    }
    alg->neg_[a] = static_cast<AlgebraElement>(raw.neg[a]);
  }
  alg->top_ = static_cast<AlgebraElement>(raw.top);
  alg->bot_ = static_cast<AlgebraElement>(raw.bot);
  alg->coprimes_ = coprimes(*alg);
  alg->is_coprime_.assign(n, 0);
  for (auto a : alg->coprimes_) alg->is_coprime_[a] = 1;
  return alg;
}

std::vector<AlgebraElement> coprimes(const DeMorganAlgebra& algebra) {
  std::vector<AlgebraElement> out;
  const auto n = static_cast<int>(algebra.size());
  for (int a = 0; a < n; ++a) {
    const auto ea = static_cast<AlgebraElement>(a);
    if (ea == algebra.bot()) continue;
    bool prime = true;
    for (int b = 0; b < n && prime; ++b) {
      for (int c = 0; c < n && prime; ++c) {
        const auto eb = static_cast<AlgebraElement>(b);
        const auto ec = static_cast<AlgebraElement>(c);
        if (algebra.leq(ea, algebra.join(eb, ec)) && !algebra.leq(ea, eb) && !algebra.leq(ea, ec)) {
          prime = false;
        }
      }
    }
    if (prime) out.push_back(ea);
  }
  return out;
}

AlgebraPtr chain(std::size_t n) {
  if (n < 2 || n > kMaxAlgebraSize) {
    throw Error(ErrorKind::SizeOutOfRange, "chain size must be in [2, 255]", {{"n", n}});
  }
  RawAlgebra r;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0) r.labels.push_back("0");
    else if (i + 1 == n) r.labels.push_back("1");
    else if (n == 3) r.labels.push_back("h");
    else r.labels.push_back("c" + std::to_string(i));
  }
  r.meet.assign(n, std::vector<int>(n));
  r.join.assign(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      r.meet[a][b] = static_cast<int>(std::min(a, b));
      r.join[a][b] = static_cast<int>(std::max(a, b));
    }
    r.neg.push_back(static_cast<int>(n - 1 - a));
  }
  r.top = static_cast<int>(n - 1);
  r.bot = 0;
  return validate_algebra(r);
}

AlgebraPtr boolean_cube(std::size_t k) {
  if (k < 1 || k > 7) {
    throw Error(ErrorKind::SizeOutOfRange, "boolean cube needs 1 to 7 atoms", {{"k", k}});
  }
  const std::size_t n = std::size_t{1} << k;
  RawAlgebra r;
  for (std::size_t mask = 0; mask < n; ++mask) {
    std::string label;
    for (std::size_t bit = k; bit-- > 0;) label.push_back((mask >> bit) & 1 ? '1' : '0');
    r.labels.push_back(label);
  }
  r.meet.assign(n, std::vector<int>(n));
  r.join.assign(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      r.meet[a][b] = static_cast<int>(a & b);
      r.join[a][b] = static_cast<int>(a | b);
    }
    r.neg.push_back(static_cast<int>((n - 1) & ~a));
  }
  r.top = static_cast<int>(n - 1);
  r.bot = 0;
  return validate_algebra(r);
}

AlgebraPtr product(const DeMorganAlgebra& lhs, const DeMorganAlgebra& rhs) {
  const std::size_t n1 = lhs.size();
  const std::size_t n2 = rhs.size();
  if (n1 * n2 > kMaxAlgebraSize) {
    throw Error(ErrorKind::SizeOutOfRange, "product algebra too large", {{"size", n1 * n2}});
  }
  const std::size_t n = n1 * n2;
  auto idx = [n2](std::size_t i, std::size_t j) { return static_cast<int>(i * n2 + j); };
  RawAlgebra r;
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n2; ++j) {
      r.labels.push_back("(" + lhs.labels()[i] + "," + rhs.labels()[j] + ")");
    }
  }
  r.meet.assign(n, std::vector<int>(n));
  r.join.assign(n, std::vector<int>(n));
  r.neg.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto a1 = static_cast<AlgebraElement>(a / n2);
    const auto a2 = static_cast<AlgebraElement>(a % n2);
    for (std::size_t b = 0; b < n; ++b) {
      const auto b1 = static_cast<AlgebraElement>(b / n2);
      const auto b2 = static_cast<AlgebraElement>(b % n2);
      r.meet[a][b] = idx(lhs.meet(a1, b1), rhs.meet(a2, b2));
      r.join[a][b] = idx(lhs.join(a1, b1), rhs.join(a2, b2));
    }
    r.neg[a] = idx(lhs.neg(a1), rhs.neg(a2));
  }
  r.top = idx(lhs.top(), rhs.top());
  r.bot = idx(lhs.bot(), rhs.bot());
  return validate_algebra(r);
}

}  // namespace slcg
