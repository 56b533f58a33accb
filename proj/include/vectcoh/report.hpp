#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace vectcoh {

inline constexpr const char* kToolVersion = "vectcoh 1.0.0";

// One verification record.  `status` is "pass", "fail" or "info"; `anchor`
// names the table, identity or block the check refers to.
struct CheckRecord {
    std::string id;
    std::string anchor;
    std::string status;
    nlohmann::ordered_json data;

    bool passed() const { return status != "fail"; }
};

// Deterministic verification report: rerunning the same command yields a
// byte-identical document (stable ordering, canonical scalar strings).
struct ReportDocument {
    std::string command;
    std::string catalog_hash;
    std::vector<std::string> assumptions;
    std::vector<CheckRecord> checks;

    void add(std::string id, std::string anchor, bool pass, nlohmann::ordered_json data = {});
    void info(std::string id, std::string anchor, nlohmann::ordered_json data = {});
    void assume(std::string text);

    size_t failures() const;
    bool all_passed() const { return failures() == 0; }

    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
};

}  // namespace vectcoh
