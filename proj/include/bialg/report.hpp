#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bialg {

inline constexpr const char* kToolName = "bialg";
inline constexpr const char* kToolVersion = "0.1.0";

std::uint64_t fnv1a64(const std::string& bytes);
std::string digest_hex(const std::string& bytes);

struct CheckLine {
    std::string name;
    bool verdict = false;
    std::string detail;  // status or defect witness; empty when silent
};

// Deterministic result carrier: identical inputs produce identical bytes in
// both renderings (stable ordering, canonical rationals, no timestamps).
struct Report {
    std::string command;
    std::string input_digest;
    std::vector<CheckLine> checks;
    std::string classification;            // empty unless classify ran
    std::vector<std::string> sections;     // preformatted blocks (tables, grids)

    int executed() const { return static_cast<int>(checks.size()); }
    int failed() const;

    std::string render_text() const;
    std::string render_json() const;
};

}  // namespace bialg
