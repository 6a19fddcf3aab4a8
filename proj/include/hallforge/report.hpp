#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hallforge/partition.hpp"

namespace hallforge {

using Json = nlohmann::ordered_json;

/// Outcome of checking one identity at one parameter point.
struct VerificationReport {
    std::string identity;
    std::vector<std::pair<std::string, Int>> params;
    bool passed = true;
    /// First failing instance, human readable; absent on success.
    std::optional<std::string> counterexample;
    /// Identity-specific evidence (windows, counts, computed values).
    Json details = Json::object();

    /// Records a failure, keeping only the first counterexample.
    void fail(std::string what) {
        if (passed) counterexample = std::move(what);
        passed = false;
    }

    std::string param_string() const;
    std::string summary_line() const;
};

Json to_json(const VerificationReport& r);
Json to_json(const Partition& p);

}  // namespace hallforge
