#include "homwb/dsl/report.hpp"

#include "homwb/error.hpp"

#include <cstdio>
#include <fstream>

namespace homwb::dsl {

std::string Report::to_json() const {
    Json j = extra;
    j["results"] = results;
    if (!command.empty()) {
        j["command"] = command;
        j["status"] = exit_code == 0 ? "pass" : exit_code == 1 ? "fail" : "error";
    }
    if (!input_digest.empty()) j["input_digest"] = input_digest;
    if (!counterexamples.empty()) j["counterexamples"] = counterexamples;
    if (!notes.empty()) j["notes"] = notes;
    if (timing_ms) j["timing_ms"] = *timing_ms;
    return j.dump(2) + "\n";
}

void emit_report(const Report& r, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open " + path + " for writing");
    out << r.to_json();
    out.flush();
    if (!out) throw InputError("failed writing " + path);
}

std::string digest(const std::string& text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace homwb::dsl
