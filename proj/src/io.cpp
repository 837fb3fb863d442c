#include "slcg/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "slcg/error.hpp"

namespace slcg::io {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void schema(const std::string& field, const std::string& message) {
  throw Error(ErrorKind::SchemaError, message, {{"field", field}});
}

const nlohmann::json& field(const nlohmann::json& j, const std::string& name) {
  if (!j.is_object()) schema(name, "expected an object");
  auto it = j.find(name);
  if (it == j.end()) schema(name, "missing field");
  return *it;
}

template <class T>
T get(const nlohmann::json& j, const std::string& name) {
  try {
    return field(j, name).get<T>();
  } catch (const nlohmann::json::exception& e) {
    schema(name, e.what());
  }
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read file", {{"path", path.string()}});
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json parse_json(const std::string& text, const std::string& where) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorKind::ParseError, "malformed JSON", {{"file", where}, {"line", line}, {"column", column}});
  }
}

nlohmann::json resolve(nlohmann::json j, const fs::path& base_dir, std::vector<fs::path>& stack) {
  if (!j.is_object()) return j;
  for (const char* key : {"algebra", "group", "structure"}) {
    auto it = j.find(key);
    if (it == j.end()) continue;
    if (it->is_string()) {
      const fs::path ref = fs::weakly_canonical(base_dir / it->get<std::string>());
      if (std::find(stack.begin(), stack.end(), ref) != stack.end()) {
        throw Error(ErrorKind::SchemaError, "cyclic file reference", {{"field", key}, {"path", ref.string()}});
      }
      stack.push_back(ref);
      auto inner = parse_json(read_file(ref), ref.string());
      *it = resolve(std::move(inner), ref.parent_path(), stack);
      stack.pop_back();
    } else {
      *it = resolve(std::move(*it), base_dir, stack);
    }
  }
  return j;
}

CarrierPtr carrier_from(const nlohmann::json& j, const std::string& name, const CarrierPtr& preferred) {
  auto labels = get<std::vector<std::string>>(j, name);
  if (preferred && preferred->labels() == labels) return preferred;
  std::vector<std::string> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::DuplicateLabel, "carrier labels must be distinct", {{"field", name}});
  }
  if (labels.empty()) throw Error(ErrorKind::SizeOutOfRange, "carrier must be non-empty", {{"field", name}});
  return make_carrier(std::move(labels));
}

nlohmann::json members_json(const ConvexStructure& s) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& m : s.members()) out.push_back(value_labels(m));
  return out;
}

}  // namespace

Document parse(const fs::path& path) {
  const auto full = fs::weakly_canonical(path);
  auto j = parse_json(read_file(full), full.string());
  std::vector<fs::path> stack{full};
  j = resolve(std::move(j), full.parent_path(), stack);
  return Document{infer_kind(j), std::move(j), full};
}

Document parse_text(const std::string& text, const fs::path& base_dir) {
  auto j = parse_json(text, "<text>");
  std::vector<fs::path> stack;
  j = resolve(std::move(j), base_dir, stack);
  return Document{infer_kind(j), std::move(j), base_dir};
}

std::string infer_kind(const nlohmann::json& j) {
  if (!j.is_object()) schema("", "document must be a JSON object");
  if (j.contains("kind")) {
    auto kind = get<std::string>(j, "kind");
    static const std::vector<std::string> kinds = {"algebra", "group",       "structure",   "crisp-structure",
                                                   "map",     "convex-group", "subbase"};
    if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end()) schema("kind", "unknown document kind");
    return kind;
  }
  if (j.contains("elements") && j.contains("meet")) return "algebra";
  if (j.contains("elements") && j.contains("mul")) return "group";
  if (j.contains("group") && j.contains("structure")) return "convex-group";
  if (j.contains("from") && j.contains("to") && j.contains("map")) return "map";
  if (j.contains("carrier") && j.contains("subbase")) return "subbase";
  if (j.contains("carrier") && j.contains("members")) return j.contains("algebra") ? "structure" : "crisp-structure";
  schema("kind", "cannot infer the document kind");
}

std::string serialize(const nlohmann::json& value) { return value.dump(2) + "\n"; }

AlgebraPtr algebra_from_json(const nlohmann::json& j) {
  RawAlgebra raw;
  raw.labels = get<std::vector<std::string>>(j, "elements");
  raw.meet = get<std::vector<std::vector<int>>>(j, "meet");
  raw.join = get<std::vector<std::vector<int>>>(j, "join");
  raw.neg = get<std::vector<int>>(j, "neg");
  raw.top = get<int>(j, "top");
  raw.bot = get<int>(j, "bot");
  return validate_algebra(raw);
}

nlohmann::json to_json(const DeMorganAlgebra& algebra) {
  const auto raw = algebra.raw();
  return {{"kind", "algebra"}, {"elements", raw.labels}, {"meet", raw.meet}, {"join", raw.join},
          {"neg", raw.neg},    {"top", raw.top},         {"bot", raw.bot}};
}

FiniteGroup group_from_json(const nlohmann::json& j) {
  return validate_group(get<std::vector<std::string>>(j, "elements"), get<std::vector<std::vector<int>>>(j, "mul"));
}

nlohmann::json to_json(const FiniteGroup& group) {
  return {{"kind", "group"}, {"elements", group.carrier()->labels()}, {"mul", group.table()}};
}

FuzzySet fuzzy_from_json(const nlohmann::json& values, const CarrierPtr& carrier, const AlgebraPtr& algebra) {
  if (!values.is_array()) schema("values", "expected an array of algebra labels");
  if (values.size() != carrier->size()) {
    throw Error(ErrorKind::CarrierMismatch, "one value per carrier element required",
                {{"expected", carrier->size()}, {"got", values.size()}});
  }
  std::vector<AlgebraElement> v;
  for (const auto& x : values) {
    if (!x.is_string()) schema("values", "algebra labels must be strings");
    v.push_back(algebra->index_of(x.get<std::string>()));
  }
  return FuzzySet(carrier, algebra, std::move(v));
}

ConvexStructure structure_from_json(const nlohmann::json& j, const CarrierPtr& preferred) {
  const auto carrier = carrier_from(j, "carrier", preferred);
  const auto algebra = algebra_from_json(field(j, "algebra"));
  const bool stratified = j.contains("stratified") ? get<bool>(j, "stratified") : true;
  const auto& members = field(j, "members");
  if (!members.is_array()) schema("members", "expected an array");
  std::vector<FuzzySet> family;
  for (const auto& m : members) family.push_back(fuzzy_from_json(m, carrier, algebra));
  return validate_structure(carrier, algebra, family, stratified);
}

nlohmann::json to_json(const ConvexStructure& s) {
  auto algebra = to_json(s.algebra());
  algebra.erase("kind");
  return {{"kind", "structure"},
          {"carrier", s.carrier().labels()},
          {"algebra", algebra},
          {"stratified", s.stratified()},
          {"members", members_json(s)}};
}

std::vector<FuzzySet> subbase_from_json(const nlohmann::json& j, CarrierPtr& carrier, AlgebraPtr& algebra) {
  carrier = carrier_from(j, "carrier", nullptr);
  algebra = algebra_from_json(field(j, "algebra"));
  const auto& sets = field(j, "subbase");
  if (!sets.is_array()) schema("subbase", "expected an array");
  std::vector<FuzzySet> out;
  for (const auto& s : sets) out.push_back(fuzzy_from_json(s, carrier, algebra));
  return out;
}

CrispConvexStructure crisp_from_json(const nlohmann::json& j, const CarrierPtr& preferred) {
  const auto carrier = carrier_from(j, "carrier", preferred);
  if (carrier->size() > kMaxCrispCarrier) {
    throw Error(ErrorKind::SizeOutOfRange, "crisp carriers are limited to 64 elements");
  }
  const auto& members = field(j, "members");
  if (!members.is_array()) schema("members", "expected an array");
  std::vector<CrispSet> family;
  for (const auto& m : members) {
    if (!m.is_array()) schema("members", "each member is an array of labels");
    CrispSet s = 0;
    for (const auto& x : m) {
      if (!x.is_string()) schema("members", "labels must be strings");
      s |= CrispSet{1} << carrier->index_of(x.get<std::string>());
    }
    family.push_back(s);
  }
  return validate_crisp_structure(carrier, family);
}

nlohmann::json to_json(const CrispConvexStructure& s) {
  nlohmann::json members = nlohmann::json::array();
  for (auto m : s.members()) members.push_back(crisp_labels(s.carrier(), m));
  return {{"kind", "crisp-structure"}, {"carrier", s.carrier().labels()}, {"members", members}};
}

CarrierMap map_from_json(const nlohmann::json& j, const CarrierPtr& source, const CarrierPtr& target) {
  const auto from = carrier_from(j, "from", source);
  const auto to = carrier_from(j, "to", target);
  if (source && !same_carrier(from, source)) throw Error(ErrorKind::CarrierMismatch, "map source differs");
  if (target && !same_carrier(to, target)) throw Error(ErrorKind::CarrierMismatch, "map target differs");
  const auto& table = field(j, "map");
  if (!table.is_object()) schema("map", "expected an object from source labels to target labels");
  std::vector<std::size_t> out(from->size());
  std::vector<bool> seen(from->size(), false);
  for (const auto& [k, v] : table.items()) {
    if (!v.is_string()) schema("map", "target labels must be strings");
    const auto x = from->index_of(k);
    out[x] = to->index_of(v.get<std::string>());
    seen[x] = true;
  }
  for (std::size_t x = 0; x < seen.size(); ++x) {
    if (!seen[x]) throw Error(ErrorKind::SchemaError, "map is not total", {{"field", "map"}, {"missing", from->label(x)}});
  }
  return CarrierMap(source ? source : from, target ? target : to, std::move(out));
}

nlohmann::json to_json(const CarrierMap& map) {
  nlohmann::json table = nlohmann::json::object();
  for (std::size_t x = 0; x < map.source()->size(); ++x) table[map.source()->label(x)] = map.target()->label(map(x));
  return {{"kind", "map"}, {"from", map.source()->labels()}, {"to", map.target()->labels()}, {"map", table}};
}

ConvexGroup convex_group_from_json(const nlohmann::json& j) {
  auto group = group_from_json(field(j, "group"));
  auto structure = structure_from_json(field(j, "structure"), group.carrier());
  if (!same_carrier(group.carrier(), structure.carrier_ptr())) {
    throw Error(ErrorKind::CarrierMismatch, "structure carrier differs from the group's elements");
  }
  return make_convex_group(std::move(group), std::move(structure));
}

nlohmann::json to_json(const ConvexGroup& cg) {
  auto group = to_json(cg.group);
  auto structure = to_json(cg.structure);
  group.erase("kind");
  structure.erase("kind");
  return {{"kind", "convex-group"}, {"group", group}, {"structure", structure}};
}

std::vector<std::size_t> subset_from_labels(const Carrier& carrier, const std::vector<std::string>& labels) {
  std::vector<std::size_t> out;
  for (const auto& l : labels) out.push_back(carrier.index_of(l));
  return out;
}

nlohmann::json canonical(const Document& doc) {
  const auto& j = doc.payload;
  if (doc.kind == "algebra") return to_json(*algebra_from_json(j));
  if (doc.kind == "group") return to_json(group_from_json(j));
  if (doc.kind == "structure") return to_json(structure_from_json(j));
  if (doc.kind == "crisp-structure") return to_json(crisp_from_json(j));
  if (doc.kind == "map") return to_json(map_from_json(j, nullptr, nullptr));
  if (doc.kind == "convex-group") {
    auto group = group_from_json(field(j, "group"));
    const auto& s = field(j, "structure");
    if (infer_kind(s) == "crisp-structure") {
      auto crisp = crisp_from_json(s, group.carrier());
      auto g = to_json(group);
      auto c = to_json(crisp);
      g.erase("kind");
      c.erase("kind");
      return {{"kind", "convex-group"}, {"group", g}, {"structure", c}};
    }
    return to_json(convex_group_from_json(j));
  }
  CarrierPtr carrier;
  AlgebraPtr algebra;
  auto sets = subbase_from_json(j, carrier, algebra);
  nlohmann::json subbase = nlohmann::json::array();
  std::sort(sets.begin(), sets.end());
  for (const auto& s : sets) subbase.push_back(value_labels(s));
  auto a = to_json(*algebra);
  a.erase("kind");
  return {{"kind", "subbase"}, {"carrier", carrier->labels()}, {"algebra", a}, {"subbase", subbase}};
}

}  // namespace slcg::io
