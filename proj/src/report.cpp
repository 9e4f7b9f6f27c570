#include "bialg/report.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace bialg {

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string digest_hex(const std::string& bytes) {
    std::uint64_t h = fnv1a64(bytes);
    std::ostringstream os;
    os << std::hex;
    for (int i = 15; i >= 0; --i) os << ((h >> (4 * i)) & 0xf);
    return os.str();
}

int Report::failed() const {
    int n = 0;
    for (const auto& c : checks)
        if (!c.verdict) ++n;
    return n;
}

std::string Report::render_text() const {
    std::ostringstream os;
    os << kToolName << " " << kToolVersion << " | " << command;
    if (!input_digest.empty()) os << " | input " << input_digest;
    os << "\n";
    for (const auto& c : checks) {
        os << "check " << c.name << ": " << (c.verdict ? "ok" : "FAIL");
        if (!c.detail.empty()) os << " (" << c.detail << ")";
        os << "\n";
    }
    if (!classification.empty()) os << "classification: " << classification << "\n";
    for (const auto& s : sections) os << s;
    return os.str();
}

std::string Report::render_json() const {
    nlohmann::ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = command;
    j["input_digest"] = input_digest;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json line;
        line["name"] = c.name;
        line["verdict"] = c.verdict;
        line["detail"] = c.detail;
        j["checks"].push_back(std::move(line));
    }
    if (!classification.empty()) j["classification"] = classification;
    if (!sections.empty()) j["sections"] = sections;
    return j.dump(2) + "\n";
}

}  // namespace bialg
