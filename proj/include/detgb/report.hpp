#pragma once
// Verification reports.  Every driver answers with one of these; the JSON
// rendering is stable (keys sorted, timings opt-in) so that a rerun with the
// same seed produces byte-identical output.

#include <map>
#include <string>

#include <json.hpp>

#include "detgb/common.hpp"

namespace detgb {

struct Report {
    std::string claim;
    std::map<std::string, std::string> parameters;
    std::string field;
    long orders_checked = 0;
    std::string mode;     // "exhaustive" | "sampled" | "single"
    std::string outcome;  // "confirmed" | "refuted" | "incomplete"
    std::map<std::string, double> timings;
    bool include_timings = false;  // timings vary run to run; off for reproducible output

    // details worth keeping around but not part of the stable schema
    std::vector<std::string> notes;

    bool confirmed() const { return outcome == "confirmed"; }

    /// Process exit code convention: confirmed 0, refuted 1, incomplete 2.
    int exit_code() const {
        if (outcome == "confirmed") return 0;
        if (outcome == "refuted") return 1;
        return 2;
    }

    static constexpr const char* schema = "detgb.report/1";

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["schema"] = schema;
        j["claim"] = claim;
        j["parameters"] = parameters;
        j["field"] = field;
        j["orders_checked"] = orders_checked;
        j["mode"] = mode;
        j["outcome"] = outcome;
        if (!notes.empty()) j["notes"] = notes;
        if (include_timings) j["timings"] = timings;
        return j;
    }

    std::string to_string() const { return to_json().dump(2); }
};

}  // namespace detgb
