#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "coresample/approx_degeneracy.hpp"

namespace coresample {

/// One CLI invocation's outcome, serialized with a fixed key order so
/// identical runs produce identical bytes (wall_ms aside).
struct RunReport {
    std::string command;

    // graph summary
    std::string source;
    std::uint64_t nodes = 0;
    std::uint64_t edges = 0;
    std::uint32_t max_degree = 0;

    // parameters
    std::string mode; // "exact" | "approx"
    double epsilon = 0;
    double c = 0;
    std::uint64_t seed = 0;
    bool lower_start = false;
    bool leaps = false;
    bool round_labels = false;

    // result
    double value = 0;           // degeneracy value; for kcore the max label
    bool used_fallback = false;
    std::optional<std::string> labels_path; // kcore only
    std::optional<double> min_label;        // kcore only
    std::optional<double> mean_label;       // kcore only

    // approx vs exact, present iff the exact value was computed in the
    // same invocation; error_factor = value / exact (1 on fallback runs)
    std::optional<double> exact_value;
    std::optional<double> error_factor;

    RunStats stats;

    nlohmann::ordered_json to_json() const;
    static RunReport from_json(const nlohmann::ordered_json& j);

    bool operator==(const RunReport& other) const = default;
};

} // namespace coresample
