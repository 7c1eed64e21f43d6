#pragma once

#include <cstdint>
#include <vector>

#include "coresample/graph.hpp"

namespace coresample {

/// Exact core numbers per node. degeneracy is the maximum label (0 for
/// edgeless graphs). For every k, a node with label >= k has at least k
/// neighbors with label >= k.
struct CoreLabels {
    std::vector<std::uint32_t> labels;
    std::uint32_t degeneracy = 0;
};

/// Linear-time peeling with a positional bucket queue: nodes are kept
/// sorted by current degree, the minimum-degree node is removed and its
/// higher-degree neighbors move down one bucket. O(n + m).
CoreLabels core_decomposition(const Graph& g);

/// Degeneracy only, same peeling loop without materializing the labels.
std::uint32_t peel_degeneracy(const Graph& g);

struct OutcoreEntry {
    std::uint32_t k = 0;
    std::uint64_t core_size = 0;     // |{v : c(v) = k}|
    std::uint64_t outcore_edges = 0; // |{(u,v) in E : c(u) = k, c(v) >= k}|
    bool ok = false;                 // outcore_edges <= k * core_size
};

struct OutcoreReport {
    std::vector<OutcoreEntry> entries; // one per k with nonempty core(k), ascending
    bool all_ok = true;
};

/// Tally the edges leaving each core level and check the bound
/// |outcore(k)| <= k * |core(k)|. A violated entry means the labels do
/// not come from a correct decomposition of g.
OutcoreReport check_outcore_bound(const Graph& g, const CoreLabels& labels);

} // namespace coresample
