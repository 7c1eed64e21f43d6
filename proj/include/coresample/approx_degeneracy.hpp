#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "coresample/graph.hpp"
#include "coresample/rng.hpp"

namespace coresample {

/// Threshold/sampling-rate schedule. Step j >= 1 has threshold
/// l = n/(1+eps1)^j and rate p = p0*(1+eps1)^(j-1), both recomputed from
/// scratch per step so that arbitrary steps (leaps, binary search) are
/// exact and l*p stays constant. eps1 = epsilon/3 and
/// p0 = 2((1+c)ln n + ln(log_{1+eps1} n))(1+eps1)^2 / (eps1^2 n).
struct Params {
    double epsilon = 0;
    double epsilon1 = 0;
    double c = 0;
    std::uint64_t step = 1;
    double threshold = 0;   // l at `step`
    double sample_rate = 0; // p at `step`
    double p0 = 0;
    std::size_t n = 0;

    /// Validates epsilon in (0,1], c > 0, n >= 2 and positions the
    /// schedule at step 1.
    static Params init(std::size_t n, double epsilon, double c);

    /// Throws std::invalid_argument unless epsilon is in (0,1] and c > 0.
    static void validate(double epsilon, double c);

    double threshold_at(std::uint64_t j) const;
    double rate_at(std::uint64_t j) const;

    /// Reposition at step j (threshold and sample_rate follow).
    void seek(std::uint64_t j);
    void advance() { seek(step + 1); }
};

/// The reused-randomness table: size entries in [0,1), fully determined
/// by the seed. One table of max-degree size serves every node in every
/// trial; the i-th sample of a degree-d node reads entry i.
class RandomSource {
public:
    RandomSource(std::uint64_t seed, std::uint32_t size);

    double value(std::uint32_t i) const {
        if (i >= values_.size()) throw std::out_of_range("random source index out of range");
        return values_[i];
    }
    double value_unchecked(std::uint32_t i) const noexcept { return values_[i]; }

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(values_.size()); }

private:
    std::uint64_t seed_;
    std::vector<double> values_;
};

/// floor(u * d) for u in [0,1): index into a degree-d incidence list.
inline std::uint32_t index_from_unit(double u, std::uint32_t d) noexcept {
    auto idx = static_cast<std::uint32_t>(u * d);
    return idx < d ? idx : d - 1; // u*d can round up to d when d is a power of two
}

/// The i-th sample of a degree-d node: floor(R[i] * d). The same (i, d)
/// maps to the same index in every trial and for every node of equal
/// degree.
inline std::uint32_t sample_index(const RandomSource& rs, std::uint32_t i, std::uint32_t d) {
    return index_from_unit(rs.value(i), d);
}

struct TrialResult {
    std::vector<NodeId> survivors; // ascending node id
    std::uint64_t samples_drawn = 0;
    std::uint64_t peeled = 0;
};

/// Test instrumentation hooks; any member may be empty. Production runs
/// pass no observer and skip all of this.
struct TrialObserver {
    // src drew dst as a sample; dst_in_high is dst's H membership at draw time
    std::function<void(NodeId src, NodeId dst, bool dst_in_high)> on_sample;
    // t(v) was decremented to t_new because of `cause` (a sample of v now known in L)
    std::function<void(NodeId v, std::int64_t t_new, NodeId cause)> on_decrement;
    // v left H with final counter t
    std::function<void(NodeId v, std::int64_t t)> on_peel;
    // v remained in H at trial end with counter t
    std::function<void(NodeId v, std::int64_t t)> on_survivor;
};

/// One threshold trial: H = {eligible v : deg(v) >= threshold}, each
/// v in H draws k(v) = ceil(rate*deg(v)) reused-randomness samples in
/// index order, decrementing t(v) for samples landing outside H and
/// recording Sampled(u) for samples landing inside; v is peeled as soon
/// as t(v)*deg(v) < threshold*k(v) (drawing stops for a node peeled
/// mid-loop), and peels propagate FIFO through the Sampled lists.
/// Buffers (including the epoch-stamped Sampled lists) are reused across
/// trials on the same engine.
class TrialEngine {
public:
    TrialEngine(const Graph& g, const RandomSource& rs);

    /// Nodes flagged here never enter H and count as "outside H" when
    /// sampled. The flags are read each trial, so the caller may update
    /// them between trials.
    void set_excluded(const std::vector<std::uint8_t>* excluded) { excluded_ = excluded; }

    TrialResult run(double threshold, double rate, const TrialObserver* observer = nullptr);

private:
    void peel(NodeId v, const TrialObserver* observer);

    const Graph& graph_;
    const RandomSource& random_;
    const std::vector<std::uint8_t>* excluded_ = nullptr;

    std::vector<std::uint8_t> in_high_;
    std::vector<std::uint32_t> sample_count_; // k(v)
    std::vector<std::int64_t> remaining_;     // t(v)
    std::vector<std::vector<NodeId>> sampled_by_;
    std::vector<std::uint32_t> sampled_epoch_;
    std::vector<NodeId> high_nodes_;
    std::vector<NodeId> queue_;
    std::uint32_t epoch_ = 0;
    std::uint64_t peeled_in_trial_ = 0;
};

/// Single trial on a fresh engine. rate must lie in (0,1) and threshold
/// must be positive; an empty survivor set is a normal outcome.
TrialResult run_trial(const Graph& g, double threshold, double rate, const RandomSource& rs,
                      const TrialObserver* observer = nullptr);

/// Largest d such that at least d nodes have degree >= d; an upper bound
/// on the degeneracy, computed from the degree histogram in O(n).
std::uint32_t lower_start_threshold(const Graph& g);

struct ApproxOptions {
    bool use_lower_start = false;
    bool use_leaps = false;
};

struct RunStats {
    std::uint64_t trials = 0;
    std::uint64_t samples_drawn = 0;
    std::uint64_t nodes_peeled = 0;
    double wall_ms = 0;

    bool operator==(const RunStats&) const = default;
};

struct ApproxResult {
    double value = 0;          // returned threshold l, or exact degeneracy from the fallback
    bool used_fallback = false;
    RunStats stats;
};

/// Randomized (1+epsilon)-approximate degeneracy. Walks the threshold
/// schedule, returning the first threshold whose trial leaves survivors;
/// when the sampling rate reaches 1 first, runs exact peeling instead
/// (used_fallback). With use_lower_start the schedule starts at the
/// degree-histogram bound; with use_leaps the step offsets double
/// (0,1,2,4,8,...) and a binary search pins the first surviving step.
/// Deterministic for fixed (graph, epsilon, c, seed, opts).
ApproxResult approximate_degeneracy(const Graph& g, double epsilon, double c, std::uint64_t seed,
                                    const ApproxOptions& opts = {});

} // namespace coresample
