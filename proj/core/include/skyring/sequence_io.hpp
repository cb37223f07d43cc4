#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "skyring/sequence.hpp"

namespace skyring {

/// Parses a sequence document:
///   {"ground": "P3", "centers": [{"index": 1, "kind": "curve",
///     "placement": {"type": "ambient_curve", "degree": 4, ...}}, ...],
///    "component_proximities": [...], "intersections": [[1, 2], ...]}
/// Structural problems raise Error(schema_violation) naming the JSON path;
/// semantic checks are left to validate().
BlowUpSequence parse_sequence(std::string_view json_text);

BlowUpSequence load_sequence(const std::filesystem::path& path);

std::string to_json(const BlowUpSequence& seq, int indent = 2);

}  // namespace skyring
