#include "coresample/graph.hpp"

#include <algorithm>
#include <cmath>

#include "coresample/rng.hpp"

namespace coresample {

namespace {

std::uint32_t sort_lists_and_max_degree(const std::vector<std::uint64_t>& offsets,
                                        std::vector<NodeId>& adjacency) {
    std::uint32_t maxd = 0;
    for (std::size_t v = 0; v + 1 < offsets.size(); ++v) {
        auto first = adjacency.begin() + static_cast<std::ptrdiff_t>(offsets[v]);
        auto last = adjacency.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]);
        std::sort(first, last);
        maxd = std::max(maxd, static_cast<std::uint32_t>(last - first));
    }
    return maxd;
}

} // namespace

Graph Graph::from_pairs(NodeId n, const std::vector<std::pair<NodeId, NodeId>>& edges) {
    std::vector<std::uint64_t> offsets(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n) throw std::out_of_range("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop in edge list");
        ++offsets[u + 1];
        ++offsets[v + 1];
    }
    for (std::size_t i = 1; i < offsets.size(); ++i) offsets[i] += offsets[i - 1];

    std::vector<NodeId> adjacency(edges.size() * 2);
    std::vector<std::uint64_t> cursor(offsets.begin(), offsets.end() - 1);
    for (const auto& [u, v] : edges) {
        adjacency[cursor[u]++] = v;
        adjacency[cursor[v]++] = u;
    }
    auto maxd = sort_lists_and_max_degree(offsets, adjacency);
    return Graph(std::move(offsets), std::move(adjacency), edges.size(), maxd);
}

Graph Graph::from_csr(std::vector<std::uint64_t> offsets, std::vector<NodeId> adjacency) {
    if (offsets.empty() || offsets.front() != 0 || offsets.back() != adjacency.size())
        throw std::invalid_argument("bad CSR offsets");
    if (!std::is_sorted(offsets.begin(), offsets.end()))
        throw std::invalid_argument("CSR offsets not nondecreasing");
    if (adjacency.size() % 2 != 0) throw std::invalid_argument("odd CSR slot count");
    const auto n = offsets.size() - 1;
    for (std::size_t v = 0; v < n; ++v)
        for (std::uint64_t i = offsets[v]; i < offsets[v + 1]; ++i) {
            if (adjacency[i] >= n) throw std::invalid_argument("CSR neighbor out of range");
            if (adjacency[i] == v) throw std::invalid_argument("CSR self-loop");
        }
    auto maxd = sort_lists_and_max_degree(offsets, adjacency);
    auto m = adjacency.size() / 2;
    return Graph(std::move(offsets), std::move(adjacency), m, maxd);
}

GraphStats compute_stats(const Graph& g) {
    GraphStats s;
    s.node_count = g.node_count();
    s.edge_count = g.edge_count();
    s.max_degree = g.max_degree();
    s.degree_histogram.assign(static_cast<std::size_t>(g.max_degree()) + 1, 0);
    for (NodeId v = 0; v < g.node_count(); ++v) ++s.degree_histogram[g.degree(v)];
    return s;
}

Graph gen_erdos_renyi(NodeId n, double avg_degree, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_erdos_renyi: n must be >= 1");
    if (avg_degree < 0) throw std::invalid_argument("gen_erdos_renyi: negative average degree");
    if (n > 1 && avg_degree > static_cast<double>(n - 1))
        throw std::invalid_argument("gen_erdos_renyi: average degree exceeds n-1");

    std::vector<std::pair<NodeId, NodeId>> edges;
    if (n > 1 && avg_degree > 0) {
        const double q = avg_degree / static_cast<double>(n - 1);
        if (q >= 1.0) {
            for (NodeId i = 0; i < n; ++i)
                for (NodeId j = i + 1; j < n; ++j) edges.emplace_back(i, j);
        } else {
            // Geometric skipping over the row-major upper triangle: the
            // gap to the next present pair is floor(log(1-u)/log(1-q)).
            edges.reserve(static_cast<std::size_t>(avg_degree * n / 2 * 1.2) + 16);
            SplitMix64 rng(seed);
            const double log1q = std::log1p(-q);
            const std::uint64_t nn = n;
            const std::uint64_t total = nn * (nn - 1) / 2 + 1; // larger than any remaining distance
            auto next_step = [&]() -> std::uint64_t {
                double gap = std::log1p(-rng.next_double()) / log1q;
                if (!(gap < static_cast<double>(total))) return total;
                return 1 + static_cast<std::uint64_t>(gap);
            };
            std::uint64_t i = 0, j = 0; // (0,0) is a virtual start just before (0,1)
            auto advance = [&](std::uint64_t by) {
                j += by;
                while (i < nn && j >= nn) {
                    ++i;
                    j = i + (j - nn) + 1;
                }
            };
            advance(next_step());
            while (i < nn - 1) {
                edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
                advance(next_step());
            }
        }
    }
    return Graph::from_pairs(n, edges);
}

Graph gen_clique_union(NodeId large_size, NodeId small_size, std::uint32_t small_count) {
    if (large_size < 1 || small_size < 1)
        throw std::invalid_argument("gen_clique_union: clique sizes must be >= 1");
    const std::uint64_t n64 =
        static_cast<std::uint64_t>(large_size) + static_cast<std::uint64_t>(small_size) * small_count;
    if (n64 > std::numeric_limits<NodeId>::max()) throw CapacityError("gen_clique_union: too many nodes");
    const auto n = static_cast<NodeId>(n64);

    // Degrees are known up front, so the CSR is filled directly.
    std::vector<std::uint64_t> offsets(static_cast<std::size_t>(n) + 1, 0);
    for (NodeId v = 0; v < large_size; ++v) offsets[v + 1] = large_size - 1;
    for (NodeId v = large_size; v < n; ++v) offsets[v + 1] = small_size - 1;
    for (std::size_t i = 1; i < offsets.size(); ++i) offsets[i] += offsets[i - 1];

    std::vector<NodeId> adjacency(offsets.back());
    auto fill_clique = [&](NodeId first, NodeId size) {
        for (NodeId v = first; v < first + size; ++v) {
            auto* out = adjacency.data() + offsets[v];
            for (NodeId u = first; u < first + size; ++u)
                if (u != v) *out++ = u;
        }
    };
    fill_clique(0, large_size);
    for (std::uint32_t k = 0; k < small_count; ++k)
        fill_clique(large_size + k * small_size, small_size);

    return Graph::from_csr(std::move(offsets), std::move(adjacency));
}

} // namespace coresample
