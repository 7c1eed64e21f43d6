#include "coresample/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace coresample {

namespace {

constexpr char kMagic[4] = {'C', 'S', 'R', 'G'};
constexpr std::uint32_t kVersion = 1;

std::uint64_t parse_id(std::string_view token, std::size_t line_no) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError("malformed node id '" + std::string(token) + "'", line_no);
    return value;
}

template <typename T>
void write_le(std::ostream& out, T value) {
    unsigned char buf[sizeof(T)];
    for (std::size_t i = 0; i < sizeof(T); ++i) buf[i] = static_cast<unsigned char>(value >> (8 * i));
    out.write(reinterpret_cast<const char*>(buf), sizeof(T));
}

template <typename T>
T read_le(std::istream& in) {
    unsigned char buf[sizeof(T)];
    in.read(reinterpret_cast<char*>(buf), sizeof(T));
    if (!in) throw std::runtime_error("truncated CSR stream");
    T value = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) value |= static_cast<T>(buf[i]) << (8 * i);
    return value;
}

} // namespace

Graph load_edge_list(std::istream& in, const LoadOptions& options) {
    std::unordered_map<std::uint64_t, NodeId> compact;
    std::vector<std::uint64_t> originals;
    auto intern = [&](std::uint64_t raw, std::size_t line_no) -> NodeId {
        if (raw > options.max_node_id)
            throw CapacityError("line " + std::to_string(line_no) + ": node id " + std::to_string(raw) +
                                " exceeds configured maximum " + std::to_string(options.max_node_id));
        auto [it, inserted] = compact.try_emplace(raw, static_cast<NodeId>(originals.size()));
        if (inserted) {
            if (originals.size() > std::numeric_limits<NodeId>::max())
                throw CapacityError("too many distinct nodes");
            originals.push_back(raw);
        }
        return it->second;
    };

    std::vector<std::pair<NodeId, NodeId>> arcs;
    std::string linebuf;
    std::size_t line_no = 0;
    while (std::getline(in, linebuf)) {
        ++line_no;
        std::string_view sv(linebuf);
        auto first_ns = sv.find_first_not_of(" \t\r");
        if (first_ns == std::string_view::npos || sv[first_ns] == '#') continue;

        std::string_view tokens[3];
        std::size_t count = 0;
        std::size_t pos = first_ns;
        while (pos < sv.size()) {
            auto end = sv.find_first_of(" \t\r", pos);
            if (end == std::string_view::npos) end = sv.size();
            if (count < 3) tokens[count] = sv.substr(pos, end - pos);
            ++count;
            pos = sv.find_first_not_of(" \t\r", end);
            if (pos == std::string_view::npos) break;
        }
        if (count != 2) throw ParseError("expected two node ids, found " + std::to_string(count), line_no);

        NodeId u = intern(parse_id(tokens[0], line_no), line_no);
        NodeId v = intern(parse_id(tokens[1], line_no), line_no);
        if (u == v) {
            if (!options.drop_self_loops) throw ParseError("self-loop", line_no);
            continue; // endpoints stay registered, edge is dropped
        }
        arcs.emplace_back(u, v);
    }

    if (options.symmetrize) {
        // Orientation is irrelevant once reverses are implied; normalize
        // so dedup collapses (u,v) and (v,u).
        for (auto& [u, v] : arcs)
            if (u > v) std::swap(u, v);
        if (options.dedup) {
            std::sort(arcs.begin(), arcs.end());
            arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
        }
    } else {
        if (options.dedup) {
            std::sort(arcs.begin(), arcs.end());
            arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
        }
        // Input must carry both directions of every edge with matching
        // multiplicity; keep one representative per reverse pair.
        std::vector<std::pair<NodeId, NodeId>> sorted = arcs;
        std::sort(sorted.begin(), sorted.end());
        std::vector<std::pair<NodeId, NodeId>> halves;
        halves.reserve(arcs.size() / 2);
        for (const auto& [u, v] : arcs) {
            auto fwd = std::equal_range(sorted.begin(), sorted.end(), std::make_pair(u, v));
            auto rev = std::equal_range(sorted.begin(), sorted.end(), std::make_pair(v, u));
            if (fwd.second - fwd.first != rev.second - rev.first)
                throw std::invalid_argument("asymmetric input with symmetrize disabled: edge " +
                                            std::to_string(u) + "-" + std::to_string(v));
            if (u < v) halves.emplace_back(u, v);
        }
        arcs = std::move(halves);
    }

    auto g = Graph::from_pairs(static_cast<NodeId>(originals.size()), arcs);
    bool identity = true;
    for (std::size_t i = 0; i < originals.size(); ++i)
        if (originals[i] != i) {
            identity = false;
            break;
        }
    if (!identity) g.set_original_ids(std::move(originals));
    return g;
}

Graph load_edge_list_file(const std::string& path, const LoadOptions& options) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_edge_list(in, options);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (g.degree(v) == 0) {
            out << v << ' ' << v << '\n';
            continue;
        }
        for (NodeId u : g.neighbors(v))
            if (v <= u) out << v << ' ' << u << '\n';
    }
}

void save_csr(const Graph& g, std::ostream& out) {
    out.write(kMagic, 4);
    write_le(out, kVersion);
    write_le(out, static_cast<std::uint64_t>(g.node_count()));
    write_le(out, g.edge_count());
    for (auto off : g.offsets()) write_le(out, off);
    for (auto u : g.adjacency()) write_le(out, u);
    const auto& ids = g.original_ids();
    write_le(out, static_cast<std::uint8_t>(ids.empty() ? 0 : 1));
    for (auto id : ids) write_le(out, id);
    if (!out) throw std::runtime_error("CSR write failed");
}

void save_csr_file(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    save_csr(g, out);
}

Graph load_csr(std::istream& in) {
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0) throw std::runtime_error("not a CSR stream");
    auto version = read_le<std::uint32_t>(in);
    if (version != kVersion)
        throw std::runtime_error("unsupported CSR version " + std::to_string(version));
    auto n = read_le<std::uint64_t>(in);
    auto m = read_le<std::uint64_t>(in);
    std::vector<std::uint64_t> offsets(n + 1);
    for (auto& off : offsets) off = read_le<std::uint64_t>(in);
    std::vector<NodeId> adjacency(2 * m);
    for (auto& u : adjacency) u = read_le<NodeId>(in);
    auto g = Graph::from_csr(std::move(offsets), std::move(adjacency));
    if (read_le<std::uint8_t>(in) != 0) {
        std::vector<std::uint64_t> ids(n);
        for (auto& id : ids) id = read_le<std::uint64_t>(in);
        g.set_original_ids(std::move(ids));
    }
    return g;
}

Graph load_csr_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_csr(in);
}

Graph load_graph_file(const std::string& path, const LoadOptions& options) {
    std::ifstream probe(path, std::ios::binary);
    if (!probe) throw std::runtime_error("cannot open " + path);
    char magic[4] = {};
    probe.read(magic, 4);
    bool binary = probe.gcount() == 4 && std::memcmp(magic, kMagic, 4) == 0;
    probe.close();
    return binary ? load_csr_file(path) : load_edge_list_file(path, options);
}

} // namespace coresample
