#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coresample {

using NodeId = std::uint32_t;

/// Malformed input text; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Input exceeds a configured size limit.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Immutable undirected graph in CSR form. Supports the two O(1)
/// queries of the incident-list access model: degree(v) and the i-th
/// neighbor of v. Incidence lists are sorted by neighbor id, so the
/// ordering is stable for the lifetime of the object. Each undirected
/// edge occupies one slot in both endpoints' lists; self-loops are
/// never stored. Safe to share across concurrent readers.
class Graph {
public:
    Graph() = default;

    /// Build from a list of undirected edges over nodes 0..n-1. The
    /// pairs are taken as-is (no dedup, no self-loop filtering); callers
    /// that want cleanup do it before this point.
    static Graph from_pairs(NodeId n, const std::vector<std::pair<NodeId, NodeId>>& edges);

    /// Build from raw CSR arrays. Validates shape (offsets monotone,
    /// targets in range, no self-loops) but trusts symmetry.
    static Graph from_csr(std::vector<std::uint64_t> offsets, std::vector<NodeId> adjacency);

    std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::uint64_t edge_count() const noexcept { return edge_count_; }
    std::uint32_t max_degree() const noexcept { return max_degree_; }

    std::uint32_t degree(NodeId v) const {
        check_node(v);
        return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
    }

    NodeId neighbor(NodeId v, std::uint32_t i) const {
        check_node(v);
        if (i >= offsets_[v + 1] - offsets_[v])
            throw std::out_of_range("neighbor index " + std::to_string(i) + " out of range for node " +
                                    std::to_string(v));
        return adjacency_[offsets_[v] + i];
    }

    std::span<const NodeId> neighbors(NodeId v) const {
        check_node(v);
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }

    const std::vector<std::uint64_t>& offsets() const noexcept { return offsets_; }
    const std::vector<NodeId>& adjacency() const noexcept { return adjacency_; }

    /// Original node ids as they appeared in the ingested source, indexed
    /// by compacted id. Empty when ids are the identity mapping
    /// (generated graphs, CSR loads without a stored mapping).
    const std::vector<std::uint64_t>& original_ids() const noexcept { return original_ids_; }
    void set_original_ids(std::vector<std::uint64_t> ids) { original_ids_ = std::move(ids); }

    bool operator==(const Graph& other) const noexcept {
        return offsets_ == other.offsets_ && adjacency_ == other.adjacency_;
    }

private:
    Graph(std::vector<std::uint64_t> offsets, std::vector<NodeId> adjacency, std::uint64_t edges,
          std::uint32_t max_degree)
        : offsets_(std::move(offsets)), adjacency_(std::move(adjacency)), edge_count_(edges),
          max_degree_(max_degree) {}

    void check_node(NodeId v) const {
        if (static_cast<std::size_t>(v) >= node_count())
            throw std::out_of_range("node " + std::to_string(v) + " out of range");
    }

    std::vector<std::uint64_t> offsets_;   // n+1 entries, offsets_[n] == 2m
    std::vector<NodeId> adjacency_;        // 2m entries, per-node segments sorted
    std::uint64_t edge_count_ = 0;         // undirected edges counted once
    std::uint32_t max_degree_ = 0;
    std::vector<std::uint64_t> original_ids_;
};

struct GraphStats {
    std::uint64_t node_count = 0;
    std::uint64_t edge_count = 0;
    std::uint32_t max_degree = 0;
    std::vector<std::uint64_t> degree_histogram; // index d -> number of nodes with degree d
};

GraphStats compute_stats(const Graph& g);

/// Erdos-Renyi G(n, q) with q = avg_degree/(n-1); each unordered pair is
/// an edge independently. Deterministic per seed. Throws
/// std::invalid_argument when avg_degree is negative or exceeds n-1.
Graph gen_erdos_renyi(NodeId n, double avg_degree, std::uint64_t seed);

/// Disjoint union of one clique on large_size nodes and small_count
/// cliques on small_size nodes each. Node ids are assigned clique by
/// clique starting from the large one.
Graph gen_clique_union(NodeId large_size, NodeId small_size, std::uint32_t small_count);

} // namespace coresample
