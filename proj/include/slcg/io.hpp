#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "slcg/convex_group.hpp"
#include "slcg/functors.hpp"

namespace slcg::io {

/// A parsed input file with every file reference replaced by its content.
/// Recognized kinds: algebra, group, structure, crisp-structure, map,
/// convex-group, subbase.
struct Document {
  std::string kind;
  nlohmann::json payload;
  std::filesystem::path path;
};

/// Reads JSON, inlining string-valued "algebra", "group" and "structure"
/// fields as paths relative to the referring file. Throws ParseError (with
/// line and column) or SchemaError.
Document parse(const std::filesystem::path& path);
Document parse_text(const std::string& text, const std::filesystem::path& base_dir);

/// Explicit "kind" when present, otherwise inferred from the field set.
std::string infer_kind(const nlohmann::json& payload);

/// Canonical text: sorted keys, two-space indentation, trailing newline.
std::string serialize(const nlohmann::json& value);

AlgebraPtr algebra_from_json(const nlohmann::json& j);
nlohmann::json to_json(const DeMorganAlgebra& algebra);

FiniteGroup group_from_json(const nlohmann::json& j);
nlohmann::json to_json(const FiniteGroup& group);

FuzzySet fuzzy_from_json(const nlohmann::json& values, const CarrierPtr& carrier, const AlgebraPtr& algebra);

/// Uses `carrier` when its labels match the file's, so results share it.
ConvexStructure structure_from_json(const nlohmann::json& j, const CarrierPtr& carrier = nullptr);
nlohmann::json to_json(const ConvexStructure& structure);
/// { carrier, algebra, subbase: [[value labels]...] }.
std::vector<FuzzySet> subbase_from_json(const nlohmann::json& j, CarrierPtr& carrier, AlgebraPtr& algebra);

CrispConvexStructure crisp_from_json(const nlohmann::json& j, const CarrierPtr& carrier = nullptr);
nlohmann::json to_json(const CrispConvexStructure& structure);

CarrierMap map_from_json(const nlohmann::json& j, const CarrierPtr& source, const CarrierPtr& target);
nlohmann::json to_json(const CarrierMap& map);

ConvexGroup convex_group_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ConvexGroup& cg);

/// Subset given as labels.
std::vector<std::size_t> subset_from_labels(const Carrier& carrier, const std::vector<std::string>& labels);

/// Validates the document with its owning module and returns its canonical form.
nlohmann::json canonical(const Document& doc);

}  // namespace slcg::io
