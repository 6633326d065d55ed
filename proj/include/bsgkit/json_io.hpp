#pragma once

#include "bsgkit/extraction.hpp"
#include "bsgkit/generate.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace bsg {

using Json = nlohmann::json;

/// Coordinates below 2^53 in magnitude are JSON numbers, larger ones are
/// decimal strings. A rank-1 element may be read from a bare scalar.
Json elem_to_json(const GroupElem& e);
GroupElem elem_from_json(const GroupSpec& spec, const Json& j);

Json group_to_json(const GroupSpec& spec);
GroupSpec group_from_json(const Json& j);

Json gen_config_to_json(const GenConfig& cfg);

/// {"group", "parts", "edges"} plus an optional "generator" record. A
/// complete hypergraph is written as "edges": "complete".
Json instance_to_json(const Instance& inst, const std::optional<GenConfig>& origin = std::nullopt);

/// Parts are brought into canonical order and edge indices remapped.
/// Throws ConfigInvalid on duplicate elements or malformed documents.
Instance instance_from_json(const Json& j);

Json report_to_json(const BoundReport& report);
Json result_to_json(const ExtractionResult& result);
/// Reads the fields needed to recheck a result (mode, subsets, parameters).
ExtractionResult result_from_json(const Json& j);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace bsg
