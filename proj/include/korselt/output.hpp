#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace korselt::cli {

using Json = nlohmann::ordered_json; // insertion order == stable key order

// One emitted record per executed operation. Self-describing: the inputs
// field is enough to re-run the command.
struct OutputRecord {
    std::string command;
    Json inputs;
    Json result;
    std::string note;                       // optional commentary, omitted when empty
    std::string provenance = "closed_form"; // or "oracle"
    double timing_ms = 0.0;
};

enum class Format { table, json_lines, csv };

std::optional<Format> parse_format(std::string_view name);

/// table: aligned key/value blocks. json-lines: one object per line, stable
/// key order. csv: header row + one row per result element, RFC-style
/// quoting; repeated when the schema changes between records. Output is
/// byte-identical across runs except for the timing field (json-lines and
/// table only; csv carries no timing).
std::string emit(const std::vector<OutputRecord>& records, Format format);

} // namespace korselt::cli
