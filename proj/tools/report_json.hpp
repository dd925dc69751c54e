#pragma once

#include <repcount/extrema.hpp>
#include <repcount/identities.hpp>

#include <json.hpp>

#include <string>

// Big integers are written as decimal strings.

namespace repcount {

inline nlohmann::json to_json(const Interval& interval) {
    return nlohmann::json::array({to_string(interval.lo()), to_string(interval.hi())});
}

inline nlohmann::json to_json(const ShiftReport& report) {
    auto failures = nlohmann::json::array();
    for (const auto& [n, value] : report.failures) {
        failures.push_back({to_string(n), to_string(value)});
    }
    return {
        {"base", report.d},
        {"j", report.j},
        {"interval", to_json(report.interval)},
        {"zero_on_interval", report.zero_on_interval},
        {"left_boundary", to_string(report.left_boundary_value)},
        {"right_boundary", to_string(report.right_boundary_value)},
        {"failures", std::move(failures)},
    };
}

inline nlohmann::json to_json(const MaxReport& report) {
    return {
        {"interval", to_json(report.interval)},
        {"max", to_string(report.max_value)},
        {"first_argmax", to_string(report.first_argmax)},
        {"predicted_argmax", to_string(report.predicted_argmax)},
        {"agree", report.agree},
    };
}

}  // namespace repcount
