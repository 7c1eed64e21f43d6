#pragma once

// Independent oracles and small-graph builders shared by the test
// suites. Everything here works from first definitions (bitmask
// enumeration, naive deletion) and never calls the peeling or sampling
// code it is used to check.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "coresample/graph.hpp"
#include "coresample/rng.hpp"

namespace oracle {

using coresample::Graph;
using coresample::NodeId;

inline Graph graph_from_edges(NodeId n, std::vector<std::pair<NodeId, NodeId>> edges) {
    return Graph::from_pairs(n, edges);
}

inline Graph complete_graph(NodeId n) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return graph_from_edges(n, std::move(edges));
}

inline Graph path_graph(NodeId n) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return graph_from_edges(n, std::move(edges));
}

inline Graph cycle_graph(NodeId n) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    if (n > 2) edges.emplace_back(n - 1, NodeId{0});
    return graph_from_edges(n, std::move(edges));
}

// node 0 is the center
inline Graph star_graph(NodeId leaves) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId i = 1; i <= leaves; ++i) edges.emplace_back(NodeId{0}, i);
    return graph_from_edges(leaves + 1, std::move(edges));
}

// Uniformly random subset of the possible edges; each pair is present
// with probability `density`.
inline Graph random_graph(NodeId n, double density, coresample::SplitMix64& rng) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j)
            if (rng.next_double() < density) edges.emplace_back(i, j);
    return graph_from_edges(n, std::move(edges));
}

// Degeneracy by definition: the maximum over all nonempty induced
// subgraphs of the minimum degree inside the subgraph. Exponential in n.
inline std::uint32_t brute_force_degeneracy(const Graph& g) {
    const auto n = static_cast<std::uint32_t>(g.node_count());
    std::uint32_t best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::uint32_t min_deg = n;
        for (std::uint32_t v = 0; v < n; ++v) {
            if (!(mask & (1u << v))) continue;
            std::uint32_t d = 0;
            for (NodeId u : g.neighbors(v))
                if (mask & (1u << u)) ++d;
            min_deg = std::min(min_deg, d);
        }
        best = std::max(best, min_deg);
    }
    return best;
}

// Core numbers by naive deletion: repeatedly remove a minimum-degree
// node (smallest id on ties); a node's core number is the running
// maximum of deletion-time degrees up to and including its own deletion.
inline std::vector<std::uint32_t> deletion_order_cores(const Graph& g) {
    const auto n = static_cast<std::uint32_t>(g.node_count());
    std::vector<std::uint32_t> deg(n), cores(n, 0);
    std::vector<bool> alive(n, true);
    for (NodeId v = 0; v < n; ++v) deg[v] = g.degree(v);

    std::uint32_t running_max = 0;
    for (std::uint32_t step = 0; step < n; ++step) {
        std::uint32_t best = n;
        for (NodeId v = 0; v < n; ++v)
            if (alive[v] && (best == n || deg[v] < deg[best])) best = v;
        running_max = std::max(running_max, deg[best]);
        cores[best] = running_max;
        alive[best] = false;
        for (NodeId u : g.neighbors(best))
            if (alive[u]) --deg[u];
    }
    return cores;
}

// Two-sided accuracy band for an approximate label against the exact
// core value: exact/(1+eps1)^2 < label <= exact*(1+1.5*eps1). A zero
// exact value demands a zero label.
inline bool in_accuracy_band(double label, double exact, double eps1) {
    if (exact == 0.0) return label == 0.0;
    return label > exact / ((1.0 + eps1) * (1.0 + eps1)) && label <= exact * (1.0 + 1.5 * eps1);
}

} // namespace oracle
