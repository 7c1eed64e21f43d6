#include "coresample/approx_kcore.hpp"

#include <chrono>
#include <limits>

#include "coresample/exact_core.hpp"

namespace coresample {

namespace {

// Exact core numbers of the subgraph induced by the unlabeled nodes,
// reported in full-graph node ids.
std::vector<std::uint32_t> peel_unlabeled(const Graph& g, const std::vector<std::uint8_t>& labeled,
                                          const std::vector<NodeId>& kept) {
    std::vector<NodeId> to_sub(g.node_count(), 0);
    for (std::size_t i = 0; i < kept.size(); ++i) to_sub[kept[i]] = static_cast<NodeId>(i);

    std::vector<std::uint64_t> offsets(kept.size() + 1, 0);
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::uint64_t d = 0;
        for (NodeId u : g.neighbors(kept[i]))
            if (!labeled[u]) ++d;
        offsets[i + 1] = offsets[i] + d;
    }
    std::vector<NodeId> adjacency(offsets.back());
    std::uint64_t slot = 0;
    for (NodeId v : kept)
        for (NodeId u : g.neighbors(v))
            if (!labeled[u]) adjacency[slot++] = to_sub[u];

    auto sub = Graph::from_csr(std::move(offsets), std::move(adjacency));
    auto cores = core_decomposition(sub);

    std::vector<std::uint32_t> out(g.node_count(), 0);
    for (std::size_t i = 0; i < kept.size(); ++i) out[kept[i]] = cores.labels[i];
    return out;
}

} // namespace

LabeledDecomposition approximate_core_decomposition(const Graph& g, double epsilon, double c,
                                                    std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    const auto n = g.node_count();

    LabeledDecomposition result;
    result.labels.assign(n, 0.0);
    result.source.assign(n, LabelSource::Peel);
    auto finish = [&]() -> LabeledDecomposition& {
        auto now = std::chrono::steady_clock::now();
        result.stats.wall_ms = std::chrono::duration<double, std::milli>(now - start).count();
        return result;
    };

    Params::validate(epsilon, c);
    if (n == 0) return finish();
    if (g.edge_count() == 0) return finish(); // every label is 0 exactly

    Params params = Params::init(n, epsilon, c);
    RandomSource random(seed, g.max_degree());
    TrialEngine engine(g, random);
    std::vector<std::uint8_t> labeled(n, 0);
    engine.set_excluded(&labeled);
    std::size_t labeled_count = 0;

    for (std::uint64_t j = 1;; ++j) {
        if (params.rate_at(j) >= 1.0) break;
        const double l = params.threshold_at(j);
        TrialResult tr = engine.run(l, params.rate_at(j));
        ++result.stats.trials;
        result.stats.samples_drawn += tr.samples_drawn;
        result.stats.nodes_peeled += tr.peeled;
        if (tr.survivors.empty()) continue;
        for (NodeId v : tr.survivors) {
            result.labels[v] = l;
            result.source[v] = LabelSource::Loop;
            labeled[v] = 1;
        }
        labeled_count += tr.survivors.size();
        result.last_loop_label = l;
        result.loop_labels.push_back(l);
        if (labeled_count == n) return finish();
    }

    std::vector<NodeId> kept;
    kept.reserve(n - labeled_count);
    for (NodeId v = 0; v < n; ++v)
        if (!labeled[v]) kept.push_back(v);
    auto peel_values = peel_unlabeled(g, labeled, kept);

    // Peeled values above last_loop_label/(1+(3/2)eps1) take the last
    // loop label instead.
    const double cap = result.last_loop_label
                           ? *result.last_loop_label / (1.0 + 1.5 * params.epsilon1)
                           : std::numeric_limits<double>::infinity();
    for (NodeId v : kept) {
        const double peeled = static_cast<double>(peel_values[v]);
        if (peeled > cap) {
            result.labels[v] = *result.last_loop_label;
            result.source[v] = LabelSource::Capped;
        } else {
            result.labels[v] = peeled;
            result.source[v] = LabelSource::Peel;
        }
    }
    return finish();
}

} // namespace coresample
