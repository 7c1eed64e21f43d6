#include "coresample/approx_degeneracy.hpp"

#include <chrono>
#include <cmath>

#include "coresample/exact_core.hpp"

namespace coresample {

void Params::validate(double epsilon, double c) {
    if (!(epsilon > 0.0) || epsilon > 1.0)
        throw std::invalid_argument("epsilon must lie in (0, 1]");
    if (!(c > 0.0)) throw std::invalid_argument("c must be positive");
}

Params Params::init(std::size_t n, double epsilon, double c) {
    validate(epsilon, c);
    if (n < 2) throw std::invalid_argument("schedule needs n >= 2");

    Params params;
    params.epsilon = epsilon;
    params.epsilon1 = epsilon / 3.0;
    params.c = c;
    params.n = n;
    const double nd = static_cast<double>(n);
    const double e1 = params.epsilon1;
    const double log_base = std::log1p(e1);
    params.p0 = 2.0 * ((1.0 + c) * std::log(nd) + std::log(std::log(nd) / log_base)) * (1.0 + e1) *
                (1.0 + e1) / (e1 * e1 * nd);
    params.seek(1);
    return params;
}

double Params::threshold_at(std::uint64_t j) const {
    return static_cast<double>(n) / std::pow(1.0 + epsilon1, static_cast<double>(j));
}

double Params::rate_at(std::uint64_t j) const {
    return p0 * std::pow(1.0 + epsilon1, static_cast<double>(j - 1));
}

void Params::seek(std::uint64_t j) {
    step = j;
    threshold = threshold_at(j);
    sample_rate = rate_at(j);
}

RandomSource::RandomSource(std::uint64_t seed, std::uint32_t size) : seed_(seed) {
    values_.resize(size);
    for (std::uint32_t i = 0; i < size; ++i)
        values_[i] = SplitMix64::to_unit(SplitMix64::at(seed, i));
}

TrialEngine::TrialEngine(const Graph& g, const RandomSource& rs) : graph_(g), random_(rs) {
    const auto n = g.node_count();
    in_high_.assign(n, 0);
    sample_count_.assign(n, 0);
    remaining_.assign(n, 0);
    sampled_by_.resize(n);
    sampled_epoch_.assign(n, 0);
}

void TrialEngine::peel(NodeId v, const TrialObserver* observer) {
    in_high_[v] = 0;
    queue_.push_back(v);
    ++peeled_in_trial_;
    if (observer && observer->on_peel) observer->on_peel(v, remaining_[v]);
}

TrialResult TrialEngine::run(double threshold, double rate, const TrialObserver* observer) {
    if (!(threshold > 0.0)) throw std::invalid_argument("trial threshold must be positive");
    if (!(rate > 0.0) || rate >= 1.0) throw std::invalid_argument("trial rate must lie in (0, 1)");
    if (random_.size() < graph_.max_degree())
        throw std::invalid_argument("random source smaller than the maximum degree");

    ++epoch_;
    high_nodes_.clear();
    queue_.clear();
    peeled_in_trial_ = 0;
    std::fill(in_high_.begin(), in_high_.end(), 0);

    const auto n = static_cast<NodeId>(graph_.node_count());
    for (NodeId v = 0; v < n; ++v) {
        if (excluded_ && (*excluded_)[v]) continue;
        if (static_cast<double>(graph_.degree(v)) >= threshold) {
            in_high_[v] = 1;
            high_nodes_.push_back(v);
        }
    }

    TrialResult result;
    for (NodeId v : high_nodes_) {
        const auto nbrs = graph_.neighbors(v);
        const auto d = static_cast<std::uint32_t>(nbrs.size());
        const auto k = static_cast<std::uint32_t>(std::ceil(rate * d));
        sample_count_[v] = k;
        remaining_[v] = k;
        for (std::uint32_t i = 0; i < k; ++i) {
            NodeId u = nbrs[index_from_unit(random_.value_unchecked(i), d)];
            ++result.samples_drawn;
            const bool u_high = in_high_[u] != 0;
            if (observer && observer->on_sample) observer->on_sample(v, u, u_high);
            if (!u_high) {
                --remaining_[v];
                if (observer && observer->on_decrement) observer->on_decrement(v, remaining_[v], u);
                // exact comparison t(v)*deg(v) < l*k(v), both products in doubles
                if (static_cast<double>(remaining_[v]) * d < threshold * k) {
                    peel(v, observer);
                    break; // a peeled node draws no further samples
                }
            } else {
                auto& list = sampled_by_[u];
                if (sampled_epoch_[u] != epoch_) {
                    list.clear();
                    sampled_epoch_[u] = epoch_;
                }
                list.push_back(v);
            }
        }
    }

    for (std::size_t head = 0; head < queue_.size(); ++head) {
        NodeId u = queue_[head];
        if (sampled_epoch_[u] != epoch_) continue;
        for (NodeId v : sampled_by_[u]) {
            if (!in_high_[v]) continue;
            --remaining_[v];
            if (observer && observer->on_decrement) observer->on_decrement(v, remaining_[v], u);
            if (static_cast<double>(remaining_[v]) * graph_.degree(v) <
                threshold * sample_count_[v])
                peel(v, observer);
        }
    }

    for (NodeId v : high_nodes_)
        if (in_high_[v]) {
            result.survivors.push_back(v);
            if (observer && observer->on_survivor) observer->on_survivor(v, remaining_[v]);
        }
    result.peeled = peeled_in_trial_;
    return result;
}

TrialResult run_trial(const Graph& g, double threshold, double rate, const RandomSource& rs,
                      const TrialObserver* observer) {
    TrialEngine engine(g, rs);
    return engine.run(threshold, rate, observer);
}

std::uint32_t lower_start_threshold(const Graph& g) {
    const auto maxd = g.max_degree();
    std::vector<std::uint64_t> at_least(static_cast<std::size_t>(maxd) + 2, 0);
    for (NodeId v = 0; v < g.node_count(); ++v) ++at_least[g.degree(v)];
    for (std::uint32_t d = maxd; d-- > 0;) at_least[d] += at_least[d + 1];
    for (std::uint32_t d = maxd; d > 0; --d)
        if (at_least[d] >= d) return d;
    return 0;
}

namespace {

class StopWatch {
public:
    double elapsed_ms() const {
        auto now = std::chrono::steady_clock::now();
        return std::chrono::duration<double, std::milli>(now - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

} // namespace

ApproxResult approximate_degeneracy(const Graph& g, double epsilon, double c, std::uint64_t seed,
                                    const ApproxOptions& opts) {
    StopWatch watch;
    ApproxResult result;
    auto finish = [&](double value, bool fallback) {
        result.value = value;
        result.used_fallback = fallback;
        result.stats.wall_ms = watch.elapsed_ms();
        return result;
    };

    Params::validate(epsilon, c);
    if (g.node_count() <= 1 || g.edge_count() == 0) return finish(0.0, false);

    Params params = Params::init(g.node_count(), epsilon, c);
    RandomSource random(seed, g.max_degree());
    TrialEngine engine(g, random);

    auto run_step = [&](std::uint64_t j) {
        TrialResult tr = engine.run(params.threshold_at(j), params.rate_at(j));
        ++result.stats.trials;
        result.stats.samples_drawn += tr.samples_drawn;
        result.stats.nodes_peeled += tr.peeled;
        return tr;
    };
    auto fallback = [&]() { return finish(static_cast<double>(peel_degeneracy(g)), true); };

    std::uint64_t start_step = 1;
    if (opts.use_lower_start) {
        const auto bound = lower_start_threshold(g);
        while (params.threshold_at(start_step) > static_cast<double>(bound)) ++start_step;
    }

    if (!opts.use_leaps) {
        for (std::uint64_t j = start_step;; ++j) {
            const double l = params.threshold_at(j);
            // No survivors at threshold 1 means the graph has no edges left
            // to certify, so the degeneracy is 0.
            if (l < 1.0) return finish(0.0, false);
            if (params.rate_at(j) >= 1.0) return fallback();
            if (!run_step(j).survivors.empty()) return finish(l, false);
        }
    }

    // Doubling probes at offsets 0,1,2,4,8,... from the start step, then
    // a binary search between the last empty probe and the first
    // surviving one.
    std::uint64_t prev_offset = 0;
    for (std::uint64_t probe = 0;; ++probe) {
        const std::uint64_t offset = probe == 0 ? 0 : std::uint64_t{1} << (probe - 1);
        const std::uint64_t j = start_step + offset;
        if (params.rate_at(j) >= 1.0) return fallback();
        if (!run_step(j).survivors.empty()) {
            if (probe == 0) return finish(params.threshold_at(j), false);
            std::uint64_t lo = start_step + prev_offset + 1;
            std::uint64_t hi = j;
            while (lo < hi) {
                const std::uint64_t mid = lo + (hi - lo) / 2;
                if (!run_step(mid).survivors.empty())
                    hi = mid;
                else
                    lo = mid + 1;
            }
            return finish(params.threshold_at(lo), false);
        }
        prev_offset = offset;
    }
}

} // namespace coresample
