#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace verlab {

// Outcome of one identity check. A failure always carries a reproducible
// witness (first differing exponent or the offending evaluation point).
struct IdentityReport {
    std::string name;
    bool pass = false;
    std::string witness;           // empty on pass
    nlohmann::json params = nlohmann::json::object();
    std::string details;

    nlohmann::json to_json() const {
        return {{"identity", name},
                {"status", pass ? "pass" : "fail"},
                {"witness", witness},
                {"params", params},
                {"details", details}};
    }
};

inline bool all_pass(const std::vector<IdentityReport>& rs) {
    for (const auto& r : rs)
        if (!r.pass) return false;
    return true;
}

} // namespace verlab
