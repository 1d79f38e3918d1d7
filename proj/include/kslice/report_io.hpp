#pragma once

#include <string>

#include <json.hpp>

#include "kslice/exact/abelian_group.hpp"
#include "kslice/family.hpp"
#include "kslice/seifert.hpp"

namespace kslice {

using Json = nlohmann::ordered_json;

/// {"name": optional text, "matrix": [[...], ...]}.  Parse errors carry the
/// byte position; validation errors carry the failing Seifert condition.
/// Both throw InvalidInput.
SeifertMatrix parse_seifert_json(const std::string& text);
/// Reads path, or path + ".json" when path itself does not exist.
SeifertMatrix parse_seifert_file(const std::string& path);

// Integers travel as decimal strings so nothing is truncated.
Json group_to_json(const AbelianGroup& g);
AbelianGroup group_from_json(const Json& j);

Json report_to_json(const ObstructionReport& r);
ObstructionReport report_from_json(const Json& j);
std::string render_report_text(const ObstructionReport& r);

/// Two-space indented JSON followed by a newline.
std::string render_machine(const Json& j);

/// Plain "key: value" rendering of a JSON document; nested objects and
/// arrays of objects are indented below their key.
std::string render_text(const Json& j);

}  // namespace kslice
