#include "vectcoh/report.hpp"

#include <sstream>

namespace vectcoh {

void ReportDocument::add(std::string id, std::string anchor, bool pass,
                         nlohmann::ordered_json data) {
    checks.push_back({std::move(id), std::move(anchor), pass ? "pass" : "fail", std::move(data)});
}

void ReportDocument::info(std::string id, std::string anchor, nlohmann::ordered_json data) {
    checks.push_back({std::move(id), std::move(anchor), "info", std::move(data)});
}

void ReportDocument::assume(std::string text) { assumptions.push_back(std::move(text)); }

size_t ReportDocument::failures() const {
    size_t n = 0;
    for (const auto& c : checks)
        if (c.status == "fail") ++n;
    return n;
}

nlohmann::ordered_json ReportDocument::to_json() const {
    nlohmann::ordered_json j;
    j["tool"] = kToolVersion;
    j["command"] = command;
    j["catalog_hash"] = catalog_hash;
    j["external_assumptions"] = assumptions;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json jc;
        jc["id"] = c.id;
        jc["anchor"] = c.anchor;
        jc["status"] = c.status;
        if (!c.data.is_null() && !(c.data.is_object() && c.data.empty())) jc["data"] = c.data;
        j["checks"].push_back(std::move(jc));
    }
    j["failures"] = failures();
    j["result"] = all_passed() ? "pass" : "fail";
    return j;
}

std::string ReportDocument::to_text() const {
    std::ostringstream os;
    os << kToolVersion << " | " << command << " | catalog " << catalog_hash << "\n";
    if (!assumptions.empty()) {
        os << "external assumptions:\n";
        for (const auto& a : assumptions) os << "  * " << a << "\n";
    }
    for (const auto& c : checks) {
        os << "  [" << (c.status == "pass" ? "ok" : c.status == "fail" ? "FAIL" : "--") << "] "
           << c.id;
        if (!c.anchor.empty()) os << "  (" << c.anchor << ")";
        os << "\n";
        if (!c.data.is_null() && !(c.data.is_object() && c.data.empty())) {
            for (const auto& [k, v] : c.data.items()) {
                os << "        " << k << ": ";
                if (v.is_string())
                    os << v.get<std::string>();
                else
                    os << v.dump();
                os << "\n";
            }
        }
    }
    os << (all_passed() ? "result: pass" : "result: FAIL") << " (" << failures() << " failing of "
       << checks.size() << " checks)\n";
    return os.str();
}

}  // namespace vectcoh
