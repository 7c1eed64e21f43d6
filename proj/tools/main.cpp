#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "coresample/approx_degeneracy.hpp"
#include "coresample/approx_kcore.hpp"
#include "coresample/exact_core.hpp"
#include "coresample/graph.hpp"
#include "coresample/graph_io.hpp"
#include "coresample/report.hpp"
#include "coresample/rng.hpp"

using namespace coresample;
using nlohmann::ordered_json;

namespace {

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

// "er:n,avgdeg" or "clique-union:large,small,count"
Graph generate_from_spec(const std::string& spec, std::uint64_t seed) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw CLI::ValidationError("--gen", "expected family:args");
    auto family = spec.substr(0, colon);
    std::vector<std::string> args;
    {
        std::string rest = spec.substr(colon + 1);
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            auto comma = rest.find(',', pos);
            if (comma == std::string::npos) comma = rest.size();
            args.push_back(rest.substr(pos, comma - pos));
            pos = comma + 1;
        }
    }
    auto as_u64 = [&](const std::string& s) -> std::uint64_t {
        std::uint64_t v{};
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || p != s.data() + s.size())
            throw CLI::ValidationError("--gen", "bad integer '" + s + "'");
        return v;
    };
    if (family == "er") {
        if (args.size() != 2) throw CLI::ValidationError("--gen", "er:n,avgdeg");
        double avg = std::strtod(args[1].c_str(), nullptr);
        return gen_erdos_renyi(static_cast<NodeId>(as_u64(args[0])), avg, seed);
    }
    if (family == "clique-union") {
        if (args.size() != 3) throw CLI::ValidationError("--gen", "clique-union:large,small,count");
        return gen_clique_union(static_cast<NodeId>(as_u64(args[0])),
                                static_cast<NodeId>(as_u64(args[1])),
                                static_cast<std::uint32_t>(as_u64(args[2])));
    }
    throw CLI::ValidationError("--gen", "unknown family '" + family + "'");
}

struct CommonArgs {
    std::string input;
    std::string gen_spec;
    std::string mode = "approx";
    double epsilon = 0.5;
    double c = 0.5;
    std::uint64_t seed = 0;
    bool lower_start = false;
    bool leaps = false;
    bool with_exact = false;
    bool json_output = false;

    void attach(CLI::App* cmd, bool kcore) {
        auto* in = cmd->add_option("--input", input, "edge-list or binary CSR file");
        auto* gen = cmd->add_option("--gen", gen_spec, "er:n,avgdeg | clique-union:large,small,count");
        in->excludes(gen);
        cmd->add_option("--mode", mode, "exact | approx")
            ->check(CLI::IsMember({"exact", "approx"}))
            ->capture_default_str();
        cmd->add_option("--epsilon", epsilon, "approximation parameter in (0,1]")->capture_default_str();
        cmd->add_option("--c", c, "failure-probability exponent")->capture_default_str();
        cmd->add_option("--seed", seed, "random seed")->capture_default_str();
        if (!kcore) {
            cmd->add_flag("--lower-start", lower_start, "start at the degree-histogram bound");
            cmd->add_flag("--leaps", leaps, "doubling threshold steps with binary search");
        }
        cmd->add_flag("--with-exact", with_exact, "also run exact peeling and report the error factor");
        cmd->add_flag("--json", json_output, "print the report as JSON");
    }

    Graph load(std::string& source_label) const {
        if (!gen_spec.empty()) {
            source_label = gen_spec;
            return generate_from_spec(gen_spec, seed);
        }
        if (input.empty()) throw CLI::RequiredError("--input or --gen");
        source_label = input;
        return load_graph_file(input);
    }
};

void fill_common(RunReport& report, const CommonArgs& args, const std::string& source, const Graph& g) {
    report.source = source;
    report.nodes = g.node_count();
    report.edges = g.edge_count();
    report.max_degree = g.max_degree();
    report.mode = args.mode;
    report.epsilon = args.epsilon;
    report.c = args.c;
    report.seed = args.seed;
    report.lower_start = args.lower_start;
    report.leaps = args.leaps;
}

void emit(const RunReport& report, bool json_output) {
    if (json_output) {
        std::cout << report.to_json().dump(2) << '\n';
        return;
    }
    std::cout << report.command << ": " << format_double(report.value);
    if (report.used_fallback) std::cout << " (exact fallback)";
    std::cout << "\n  graph " << report.source << ": n=" << report.nodes << " m=" << report.edges
              << " max_degree=" << report.max_degree << '\n';
    if (report.exact_value)
        std::cout << "  exact=" << format_double(*report.exact_value)
                  << " error_factor=" << format_double(*report.error_factor) << '\n';
    std::cout << "  trials=" << report.stats.trials << " samples=" << report.stats.samples_drawn
              << " peeled=" << report.stats.nodes_peeled << " wall_ms=" << report.stats.wall_ms
              << '\n';
}

int cmd_degeneracy(const CommonArgs& args) {
    std::string source;
    Graph g = args.load(source);

    RunReport report;
    report.command = "degeneracy";
    fill_common(report, args, source, g);

    if (args.mode == "exact") {
        auto t0 = std::chrono::steady_clock::now();
        report.value = static_cast<double>(peel_degeneracy(g));
        report.stats.wall_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        if (args.with_exact) {
            report.exact_value = report.value;
            report.error_factor = 1.0;
        }
    } else {
        ApproxOptions opts{args.lower_start, args.leaps};
        auto res = approximate_degeneracy(g, args.epsilon, args.c, args.seed, opts);
        report.value = res.value;
        report.used_fallback = res.used_fallback;
        report.stats = res.stats;
        if (args.with_exact) {
            double exact = static_cast<double>(peel_degeneracy(g));
            report.exact_value = exact;
            report.error_factor = exact == 0.0 ? 1.0 : res.value / exact;
        }
    }
    emit(report, args.json_output);
    return 0;
}

int cmd_kcore(const CommonArgs& args, const std::string& output, bool round_labels) {
    std::string source;
    Graph g = args.load(source);

    RunReport report;
    report.command = "kcore";
    fill_common(report, args, source, g);
    report.round_labels = round_labels;

    std::vector<double> labels;
    if (args.mode == "exact") {
        auto t0 = std::chrono::steady_clock::now();
        auto cores = core_decomposition(g);
        report.stats.wall_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        labels.assign(cores.labels.begin(), cores.labels.end());
    } else {
        auto res = approximate_core_decomposition(g, args.epsilon, args.c, args.seed);
        report.stats = res.stats;
        report.used_fallback = !res.last_loop_label.has_value();
        labels = std::move(res.labels);
    }
    if (round_labels)
        for (auto& l : labels) l = static_cast<double>(std::llround(l));

    std::ofstream out(output);
    if (!out) {
        std::cerr << "error: cannot open " << output << " for writing\n";
        return 1;
    }
    for (std::size_t v = 0; v < labels.size(); ++v) out << v << '\t' << format_double(labels[v]) << '\n';
    out.close();
    if (!out) {
        std::cerr << "error: write to " << output << " failed\n";
        return 1;
    }
    if (!g.original_ids().empty()) {
        std::ofstream map(output + ".map");
        for (std::size_t v = 0; v < g.original_ids().size(); ++v)
            map << v << '\t' << g.original_ids()[v] << '\n';
    }

    report.labels_path = output;
    if (!labels.empty()) {
        report.value = *std::max_element(labels.begin(), labels.end());
        report.min_label = *std::min_element(labels.begin(), labels.end());
        report.mean_label = std::accumulate(labels.begin(), labels.end(), 0.0) /
                            static_cast<double>(labels.size());
    } else {
        report.min_label = 0.0;
        report.mean_label = 0.0;
    }
    emit(report, args.json_output);
    return 0;
}

struct BenchRow {
    std::uint64_t requested_n = 0;
    std::uint64_t actual_n = 0;
    double mean_samples = 0;
    double per_nlogn = 0;
    std::optional<double> per_nblogn;
};

double fitted_exponent(const std::vector<BenchRow>& rows) {
    // least-squares slope of log1p(samples) against log(n)
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const auto k = static_cast<double>(rows.size());
    for (const auto& r : rows) {
        double x = std::log(static_cast<double>(r.actual_n));
        double y = std::log1p(r.mean_samples);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

int cmd_bench_scaling(const std::string& family, const std::vector<std::uint64_t>& sizes,
                      double avg_degree, double exponent, double epsilon, double c,
                      std::uint32_t seeds_per_size, std::uint64_t seed, bool lower_start, bool leaps,
                      bool kcore_mode, bool json_output) {
    const double e1 = epsilon / 3.0;
    std::vector<BenchRow> rows;
    for (std::size_t idx = 0; idx < sizes.size(); ++idx) {
        const std::uint64_t n = sizes[idx];
        const std::uint64_t graph_seed = SplitMix64::at(seed, idx);
        Graph g;
        if (family == "er") {
            g = gen_erdos_renyi(static_cast<NodeId>(n), avg_degree, graph_seed);
        } else {
            auto large = static_cast<NodeId>(
                std::llround(std::pow(static_cast<double>(n), exponent)));
            auto small = static_cast<NodeId>(
                std::max<std::int64_t>(1, std::llround(large / ((1.0 + e1) * (1.0 + e1)))));
            auto count = static_cast<std::uint32_t>(n > large ? (n - large) / small : 0);
            g = gen_clique_union(large, small, count);
        }

        double total_samples = 0;
        for (std::uint32_t run = 0; run < seeds_per_size; ++run) {
            const std::uint64_t run_seed = SplitMix64::at(graph_seed, run);
            std::uint64_t samples;
            if (kcore_mode) {
                samples = approximate_core_decomposition(g, epsilon, c, run_seed).stats.samples_drawn;
            } else {
                samples = approximate_degeneracy(g, epsilon, c, run_seed,
                                                 ApproxOptions{lower_start, leaps})
                              .stats.samples_drawn;
            }
            total_samples += static_cast<double>(samples);
        }

        BenchRow row;
        row.requested_n = n;
        row.actual_n = g.node_count();
        row.mean_samples = total_samples / seeds_per_size;
        const double nd = static_cast<double>(g.node_count());
        row.per_nlogn = row.mean_samples / (nd * std::log(nd));
        if (family == "clique-union")
            row.per_nblogn = row.mean_samples / (std::pow(nd, exponent) * std::log(nd));
        rows.push_back(row);
    }

    std::optional<double> ratio;
    std::optional<double> slope;
    if (rows.size() > 1) {
        double lo = rows[0].per_nlogn, hi = rows[0].per_nlogn;
        for (const auto& r : rows) {
            lo = std::min(lo, r.per_nlogn);
            hi = std::max(hi, r.per_nlogn);
        }
        ratio = (hi == lo) ? 1.0 : hi / lo; // equal values (including all-zero) vary by a factor of 1
        slope = fitted_exponent(rows);
    }

    if (json_output) {
        ordered_json j;
        j["command"] = "bench-scaling";
        j["family"] = family;
        j["params"] = {{"epsilon", epsilon},
                       {"c", c},
                       {"seed", seed},
                       {"seeds_per_size", seeds_per_size},
                       {"avg_degree", avg_degree},
                       {"exponent", exponent},
                       {"lower_start", lower_start},
                       {"leaps", leaps}};
        j["rows"] = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json row{{"n", r.requested_n},
                             {"actual_n", r.actual_n},
                             {"mean_samples", r.mean_samples},
                             {"per_nlogn", r.per_nlogn}};
            if (r.per_nblogn) row["per_nblogn"] = *r.per_nblogn;
            j["rows"].push_back(std::move(row));
        }
        if (ratio) j["ratio_max_min"] = *ratio;
        if (slope) j["fitted_exponent"] = *slope;
        std::cout << j.dump(2) << '\n';
        return 0;
    }

    std::printf("%10s %10s %14s %14s %14s\n", "n", "actual_n", "mean_samples", "per_nlogn",
                family == "clique-union" ? "per_nblogn" : "");
    for (const auto& r : rows)
        std::printf("%10llu %10llu %14.1f %14.6f %14s\n",
                    static_cast<unsigned long long>(r.requested_n),
                    static_cast<unsigned long long>(r.actual_n), r.mean_samples, r.per_nlogn,
                    r.per_nblogn ? format_double(*r.per_nblogn).c_str() : "");
    if (ratio) std::printf("ratio max/min per_nlogn: %s\n", format_double(*ratio).c_str());
    if (slope) std::printf("fitted log-log exponent: %s\n", format_double(*slope).c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"approximate graph degeneracy and k-core decomposition by neighbor sampling"};
    app.require_subcommand(1);

    CommonArgs deg_args;
    auto* deg = app.add_subcommand("degeneracy", "compute the degeneracy of a graph");
    deg_args.attach(deg, false);

    CommonArgs kcore_args;
    std::string kcore_output;
    bool round_labels = false;
    auto* kcore = app.add_subcommand("kcore", "label every node with an approximate core number");
    kcore_args.attach(kcore, true);
    kcore->add_option("--output", kcore_output, "labels file (node_id<TAB>label per line)")->required();
    kcore->add_flag("--round-labels", round_labels, "round labels to the nearest integer");

    std::string bench_family = "er";
    std::vector<std::uint64_t> bench_sizes;
    double bench_avg_degree = 20.0;
    double bench_exponent = 0.5;
    double bench_epsilon = 0.5;
    double bench_c = 0.5;
    std::uint32_t seeds_per_size = 5;
    std::uint64_t bench_seed = 0;
    bool bench_lower_start = false;
    bool bench_leaps = false;
    bool bench_kcore = false;
    bool bench_json = false;
    auto* bench = app.add_subcommand("bench-scaling", "sample-count scaling over graph sizes");
    bench->add_option("--family", bench_family)->check(CLI::IsMember({"er", "clique-union"}));
    bench->add_option("--sizes", bench_sizes, "node counts")->required()->delimiter(',');
    bench->add_option("--avg-degree", bench_avg_degree, "er family average degree");
    bench->add_option("--exponent", bench_exponent, "clique-union large-clique exponent b");
    bench->add_option("--epsilon", bench_epsilon)->capture_default_str();
    bench->add_option("--c", bench_c)->capture_default_str();
    bench->add_option("--seeds-per-size", seeds_per_size)->capture_default_str();
    bench->add_option("--seed", bench_seed)->capture_default_str();
    bench->add_flag("--lower-start", bench_lower_start);
    bench->add_flag("--leaps", bench_leaps);
    bench->add_flag("--kcore", bench_kcore, "measure the k-core labeling loop instead");
    bench->add_flag("--json", bench_json);

    std::string conv_input, conv_output;
    auto* conv = app.add_subcommand("convert", "convert an edge list to the binary CSR format");
    conv->add_option("--input", conv_input)->required();
    conv->add_option("--output", conv_output)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (deg->parsed()) return cmd_degeneracy(deg_args);
        if (kcore->parsed()) return cmd_kcore(kcore_args, kcore_output, round_labels);
        if (bench->parsed())
            return cmd_bench_scaling(bench_family, bench_sizes, bench_avg_degree, bench_exponent,
                                     bench_epsilon, bench_c, seeds_per_size, bench_seed,
                                     bench_lower_start, bench_leaps, bench_kcore, bench_json);
        if (conv->parsed()) {
            save_csr_file(load_graph_file(conv_input), conv_output);
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
