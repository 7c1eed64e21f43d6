#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "coresample/exact_core.hpp"
#include "coresample/graph.hpp"
#include "coresample/rng.hpp"
#include "oracle_helpers.hpp"

using namespace coresample;

TEST_CASE("core_decomposition on fixed families") {
    auto k5 = oracle::complete_graph(5);
    auto cores = core_decomposition(k5);
    CHECK(cores.degeneracy == 4);
    for (auto l : cores.labels) CHECK(l == 4);

    auto star = oracle::star_graph(5);
    cores = core_decomposition(star);
    CHECK(cores.degeneracy == 1);
    for (auto l : cores.labels) CHECK(l == 1);

    auto empty = oracle::graph_from_edges(4, {});
    cores = core_decomposition(empty);
    CHECK(cores.degeneracy == 0);
    for (auto l : cores.labels) CHECK(l == 0);

    CHECK(core_decomposition(Graph{}).labels.empty());
}

TEST_CASE("peel_degeneracy on fixed families") {
    CHECK(peel_degeneracy(oracle::cycle_graph(10)) == 2);
    // tree on 50 nodes
    std::vector<std::pair<NodeId, NodeId>> edges;
    SplitMix64 rng(17);
    for (NodeId v = 1; v < 50; ++v)
        edges.emplace_back(v, static_cast<NodeId>(rng.next() % v));
    CHECK(peel_degeneracy(oracle::graph_from_edges(50, edges)) == 1);
    CHECK(peel_degeneracy(gen_clique_union(100, 80, 50)) == 99);
}

TEST_CASE("labels match the deletion-order oracle on random graphs") {
    SplitMix64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        auto n = static_cast<NodeId>(2 + rng.next() % 7);
        auto g = oracle::random_graph(n, rng.next_double(), rng);
        auto expect = oracle::deletion_order_cores(g);
        auto got = core_decomposition(g);
        CHECK(got.labels == expect);
        CHECK(got.degeneracy == *std::max_element(expect.begin(), expect.end()));
        CHECK(peel_degeneracy(g) == got.degeneracy);
    }
}

TEST_CASE("degeneracy matches the induced-subgraph definition exhaustively") {
    SplitMix64 rng(31);
    for (NodeId n = 1; n <= 8; ++n) {
        for (int trial = 0; trial < 60; ++trial) {
            auto g = oracle::random_graph(n, rng.next_double(), rng);
            CHECK(peel_degeneracy(g) == oracle::brute_force_degeneracy(g));
        }
    }
}

TEST_CASE("core labels validate their own defining property") {
    auto g = gen_erdos_renyi(200, 12.0, 5);
    auto cores = core_decomposition(g);
    // every node with label >= k has at least k neighbors with label >= k
    for (NodeId v = 0; v < g.node_count(); ++v) {
        std::uint32_t k = cores.labels[v];
        std::uint32_t strong = 0;
        for (NodeId u : g.neighbors(v))
            if (cores.labels[u] >= k) ++strong;
        CHECK(strong >= k);
    }
    std::uint32_t maxl = 0;
    for (auto l : cores.labels) maxl = std::max(maxl, l);
    CHECK(cores.degeneracy == maxl);
}

TEST_CASE("decomposition is invariant under node relabeling") {
    SplitMix64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        auto n = static_cast<NodeId>(3 + rng.next() % 10);
        auto g = oracle::random_graph(n, 0.5, rng);
        std::vector<NodeId> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (NodeId i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.next() % i]);

        std::vector<std::pair<NodeId, NodeId>> edges;
        for (NodeId v = 0; v < n; ++v)
            for (NodeId u : g.neighbors(v))
                if (v < u) edges.emplace_back(perm[v], perm[u]);
        auto h = oracle::graph_from_edges(n, edges);

        auto cg = core_decomposition(g);
        auto ch = core_decomposition(h);
        CHECK(cg.degeneracy == ch.degeneracy);
        for (NodeId v = 0; v < n; ++v) CHECK(cg.labels[v] == ch.labels[perm[v]]);
    }
}

TEST_CASE("adding an edge never lowers a core number") {
    SplitMix64 rng(53);
    for (int trial = 0; trial < 40; ++trial) {
        auto n = static_cast<NodeId>(4 + rng.next() % 5);
        auto g = oracle::random_graph(n, 0.4, rng);
        // pick a non-edge
        NodeId a = static_cast<NodeId>(rng.next() % n), b = static_cast<NodeId>(rng.next() % n);
        bool present = a == b;
        for (NodeId u : g.neighbors(a)) present = present || u == b;
        if (present) continue;

        std::vector<std::pair<NodeId, NodeId>> edges;
        for (NodeId v = 0; v < n; ++v)
            for (NodeId u : g.neighbors(v))
                if (v < u) edges.emplace_back(v, u);
        edges.emplace_back(a, b);
        auto h = oracle::graph_from_edges(n, edges);

        auto before = core_decomposition(g).labels;
        auto after = core_decomposition(h).labels;
        for (NodeId v = 0; v < n; ++v) CHECK(after[v] >= before[v]);
    }
}

TEST_CASE("check_outcore_bound tallies and verifies") {
    SUBCASE("complete graph") {
        auto k5 = oracle::complete_graph(5);
        auto report = check_outcore_bound(k5, core_decomposition(k5));
        REQUIRE(report.entries.size() == 1);
        CHECK(report.entries[0].k == 4);
        CHECK(report.entries[0].core_size == 5);
        CHECK(report.entries[0].outcore_edges == 10);
        CHECK(report.entries[0].ok);
        CHECK(report.all_ok);
    }
    SUBCASE("star") {
        auto star = oracle::star_graph(5);
        auto report = check_outcore_bound(star, core_decomposition(star));
        REQUIRE(report.entries.size() == 1);
        CHECK(report.entries[0].k == 1);
        CHECK(report.entries[0].core_size == 6);
        CHECK(report.entries[0].outcore_edges == 5);
        CHECK(report.entries[0].ok);
    }
    SUBCASE("random graph holds for every k") {
        auto g = gen_erdos_renyi(100, 10.0, 77);
        auto report = check_outcore_bound(g, core_decomposition(g));
        CHECK(report.all_ok);
        std::uint64_t edge_total = 0;
        for (const auto& e : report.entries) edge_total += e.outcore_edges;
        CHECK(edge_total == g.edge_count()); // every edge lands in exactly one outcore level
    }
    SUBCASE("corrupted labels are flagged") {
        auto k5 = oracle::complete_graph(5);
        auto cores = core_decomposition(k5);
        for (auto& l : cores.labels) l = 1; // pretend K5 is a 1-core
        cores.degeneracy = 1;
        auto report = check_outcore_bound(k5, cores);
        CHECK_FALSE(report.all_ok); // 10 edges > 1 * 5 nodes
    }
}
