#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace homwb::dsl {

using Json = nlohmann::json;

struct Report {
    std::string command;
    std::string input_digest;
    Json results = Json::array();
    Json counterexamples = Json::array();
    std::vector<std::string> notes;
    /// Command-specific top-level fields (summary, pages, ...).
    Json extra = Json::object();
    std::optional<std::int64_t> timing_ms;
    int exit_code = 0;

    /// Sorted keys, two-space indent, trailing newline. Empty optional
    /// parts are omitted, so a blank report is {"results": []}.
    std::string to_json() const;
};

/// Writes to_json() to path; throws InputError on I/O failure.
void emit_report(const Report& r, const std::string& path);

/// FNV-1a 64 of the text, as 16 hex digits.
std::string digest(const std::string& text);

} // namespace homwb::dsl
