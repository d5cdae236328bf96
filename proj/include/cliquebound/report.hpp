#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace cliquebound {

/// A witness is a graph (hex canonical key plus one graph6 representative)
/// or, for arithmetic sweeps, a labelled instance with no graph6 text.
struct Witness {
    std::string key;
    std::string graph6;
};

using Fields = std::vector<std::pair<std::string, std::int64_t>>;

/// Outcome of one verification run. Passing means no violations.
struct VerifyReport {
    std::string target;
    Fields space;
    std::int64_t examined = 0;
    std::optional<std::int64_t> extremal_value;
    std::optional<std::int64_t> conjectured_value;
    std::vector<Witness> witnesses;
    std::vector<std::string> violations;
    std::int64_t millis = 0;
    Fields details;

    bool passed() const { return violations.empty(); }

    std::optional<std::int64_t> detail(const std::string& name) const {
        for (const auto& [k, v] : details) {
            if (k == name) {
                return v;
            }
        }
        return std::nullopt;
    }
};

/// Measures wall time into report.millis when it goes out of scope.
class ReportTimer {
public:
    explicit ReportTimer(VerifyReport& report)
        : report_(report), start_(std::chrono::steady_clock::now()) {}
    ~ReportTimer() {
        report_.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start_)
                             .count();
    }
    ReportTimer(const ReportTimer&) = delete;
    ReportTimer& operator=(const ReportTimer&) = delete;

private:
    VerifyReport& report_;
    std::chrono::steady_clock::time_point start_;
};

inline nlohmann::ordered_json to_json(const VerifyReport& r) {
    nlohmann::ordered_json j;
    j["target"] = r.target;
    nlohmann::ordered_json space = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.space) {
        space[k] = v;
    }
    j["space"] = space;
    j["examined"] = r.examined;
    j["extremal_value"] = r.extremal_value ? nlohmann::ordered_json(*r.extremal_value) : nullptr;
    j["conjectured_value"] = r.conjectured_value ? nlohmann::ordered_json(*r.conjectured_value) : nullptr;
    nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
    for (const Witness& w : r.witnesses) {
        witnesses.push_back({{"key", w.key}, {"graph6", w.graph6}});
    }
    j["witnesses"] = witnesses;
    j["violations"] = r.violations;
    j["millis"] = r.millis;
    nlohmann::ordered_json details = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.details) {
        details[k] = v;
    }
    j["details"] = details;
    j["passed"] = r.passed();
    return j;
}

} // namespace cliquebound
