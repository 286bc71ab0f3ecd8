#pragma once

// Machine-readable output documents (schema "kcycle/1", see
// schema/kcycle-1.json). Field order is fixed by construction.

#include "kcycle/ccengine.hpp"

#include "json.hpp"

#include <string>
#include <string_view>

namespace kcycle {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchemaVersion = "kcycle/1";

Json setup_json(const Setup& setup);
Json cycle_json(const CharacteristicCycle& cc);
Json verdict_json(const MicrolocalVerdict& verdict);
Json smallness_json(const SmallnessResult& result);
Json tally_json(const TransversalityTally& tally);

/// {schema_version, command, setup, payload}; `setup` may be null.
Json make_document(std::string_view command, const Json& setup, Json payload);

/// Parses a document and checks the envelope; throws std::invalid_argument.
Json parse_document(std::string_view text);

/// Canonical serialization: two-space indent, trailing newline.
std::string render(const Json& document);

}  // namespace kcycle
