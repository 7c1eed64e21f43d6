#include "coresample/exact_core.hpp"

#include <algorithm>

namespace coresample {

namespace {

// Positional bucket peeling. vert holds the nodes sorted by current
// degree (stable by id within a degree at the start); bin_start[d] is
// the first index of the degree-d zone. Popping left to right always
// removes a minimum-degree node; a neighbor with strictly larger current
// degree swaps down into the zone boundary one bucket below. The popped
// degree sequence is nondecreasing, so the pop degree is the core
// number.
std::uint32_t peel(const Graph& g, std::vector<std::uint32_t>* labels_out) {
    const auto n = static_cast<std::uint32_t>(g.node_count());
    if (n == 0) return 0;

    std::vector<std::uint32_t> deg(n);
    for (NodeId v = 0; v < n; ++v) deg[v] = g.degree(v);
    const std::uint32_t maxd = g.max_degree();

    std::vector<std::uint32_t> bin_start(maxd + 2, 0);
    for (NodeId v = 0; v < n; ++v) ++bin_start[deg[v] + 1];
    for (std::uint32_t d = 1; d < bin_start.size(); ++d) bin_start[d] += bin_start[d - 1];

    std::vector<NodeId> vert(n);
    std::vector<std::uint32_t> pos(n);
    {
        std::vector<std::uint32_t> cursor(bin_start.begin(), bin_start.end() - 1);
        for (NodeId v = 0; v < n; ++v) {
            pos[v] = cursor[deg[v]]++;
            vert[pos[v]] = v;
        }
    }

    if (labels_out) labels_out->assign(n, 0);
    std::uint32_t degeneracy = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
        NodeId v = vert[i];
        degeneracy = deg[v]; // nondecreasing over pops
        if (labels_out) (*labels_out)[v] = deg[v];
        for (NodeId u : g.neighbors(v)) {
            if (deg[u] <= deg[v]) continue;
            std::uint32_t du = deg[u];
            std::uint32_t boundary = bin_start[du];
            NodeId w = vert[boundary];
            if (u != w) {
                vert[boundary] = u;
                vert[pos[u]] = w;
                pos[w] = pos[u];
                pos[u] = boundary;
            }
            ++bin_start[du];
            --deg[u];
        }
    }
    return degeneracy;
}

} // namespace

CoreLabels core_decomposition(const Graph& g) {
    CoreLabels result;
    result.degeneracy = peel(g, &result.labels);
    return result;
}

std::uint32_t peel_degeneracy(const Graph& g) {
    return peel(g, nullptr);
}

OutcoreReport check_outcore_bound(const Graph& g, const CoreLabels& labels) {
    if (labels.labels.size() != g.node_count())
        throw std::invalid_argument("label array does not match graph");

    // Each edge belongs to outcore(k) for k = min of its endpoint
    // labels: that endpoint has c = k and the other has c >= k.
    std::vector<std::uint64_t> core_size(static_cast<std::size_t>(labels.degeneracy) + 1, 0);
    std::vector<std::uint64_t> outcore(static_cast<std::size_t>(labels.degeneracy) + 1, 0);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        ++core_size[labels.labels[v]];
        for (NodeId u : g.neighbors(v))
            if (v < u) ++outcore[std::min(labels.labels[v], labels.labels[u])];
    }

    OutcoreReport report;
    for (std::uint32_t k = 0; k < core_size.size(); ++k) {
        if (core_size[k] == 0) continue;
        OutcoreEntry entry{k, core_size[k], outcore[k],
                           outcore[k] <= static_cast<std::uint64_t>(k) * core_size[k]};
        report.all_ok = report.all_ok && entry.ok;
        report.entries.push_back(entry);
    }
    return report;
}

} // namespace coresample
