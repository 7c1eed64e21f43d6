#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "coresample/graph.hpp"

namespace coresample {

struct LoadOptions {
    bool symmetrize = true;       // treat lines as directed arcs and add reverses
    bool drop_self_loops = true;  // false: a self-loop is a ParseError instead
    bool dedup = true;            // false: parallel edges are kept
    std::uint64_t max_node_id = std::numeric_limits<std::uint64_t>::max();
};

/// Parse whitespace-separated "u v" pairs, one edge per line; lines
/// starting with '#' and blank lines are skipped. Node ids are compacted
/// to 0..n-1 in order of first appearance (the original ids are kept on
/// the Graph). Nodes seen only in dropped self-loops are retained with
/// degree 0.
///
/// With symmetrize=false the input must already contain every edge in
/// both directions; asymmetric input is a ParseError.
Graph load_edge_list(std::istream& in, const LoadOptions& options = {});
Graph load_edge_list_file(const std::string& path, const LoadOptions& options = {});

/// Inverse of load_edge_list for the compacted graph: one "u v" line per
/// edge slot pair with u <= v (parallel edges repeat). Isolated nodes are
/// written as "v v" self-loop lines so a reload preserves n.
void write_edge_list(const Graph& g, std::ostream& out);

/// Binary CSR image: magic "CSRG", u32 version, u64 n, u64 m, u64
/// offsets[n+1], u32 adjacency[2m], u8 has_ids, u64 original_ids[n] if
/// present. All integers little-endian fixed width.
void save_csr(const Graph& g, std::ostream& out);
void save_csr_file(const Graph& g, const std::string& path);
Graph load_csr(std::istream& in);
Graph load_csr_file(const std::string& path);

/// Reads either format: binary when the stream starts with the CSR
/// magic, edge-list text otherwise.
Graph load_graph_file(const std::string& path, const LoadOptions& options = {});

} // namespace coresample
