#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "coresample/approx_degeneracy.hpp"
#include "coresample/graph.hpp"

namespace coresample {

enum class LabelSource : std::uint8_t {
    Loop,   // assigned a threshold value while surviving a trial
    Peel,   // assigned its exact core number by the final peeling
    Capped, // peeled value exceeded the cap, got the last loop label instead
};

struct LabeledDecomposition {
    std::vector<double> labels;
    std::vector<LabelSource> source;
    /// Last threshold assigned inside the trial loop, if any; the cap for
    /// the final peeling is last_loop_label/(1+(3/2)eps1).
    std::optional<double> last_loop_label;
    /// Thresholds at which survivors were labeled, in assignment order
    /// (strictly decreasing).
    std::vector<double> loop_labels;
    RunStats stats;
};

/// Per-node (1+epsilon)-approximate core numbers. Runs the same
/// threshold schedule as approximate_degeneracy but keeps going after a
/// trial leaves survivors: survivors take the current threshold as their
/// label and drop out of the working set, so later trials see them as
/// already peeled. Once the rate reaches 1, the unlabeled remainder is
/// peeled exactly, except that a peeled value above
/// last_loop_label/(1+(3/2)eps1) is capped to last_loop_label.
/// Leaps/lower-start are not applied: every step must run to emit labels
/// at each level. Node degrees in k(v) and the peel threshold are always
/// the full-graph degrees.
LabeledDecomposition approximate_core_decomposition(const Graph& g, double epsilon, double c,
                                                    std::uint64_t seed);

} // namespace coresample
