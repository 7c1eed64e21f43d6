#include "coresample/report.hpp"

namespace coresample {

using nlohmann::ordered_json;

ordered_json RunReport::to_json() const {
    ordered_json j;
    j["command"] = command;
    j["graph"] = {{"source", source}, {"n", nodes}, {"m", edges}, {"max_degree", max_degree}};
    j["params"] = {{"mode", mode},           {"epsilon", epsilon}, {"c", c},
                   {"seed", seed},           {"lower_start", lower_start},
                   {"leaps", leaps},         {"round_labels", round_labels}};
    ordered_json res;
    res["value"] = value;
    res["used_fallback"] = used_fallback;
    if (labels_path) res["labels_path"] = *labels_path;
    if (min_label) res["min_label"] = *min_label;
    if (mean_label) res["mean_label"] = *mean_label;
    j["result"] = std::move(res);
    if (exact_value) j["exact_value"] = *exact_value;
    if (error_factor) j["error_factor"] = *error_factor;
    j["stats"] = {{"trials", stats.trials},
                  {"samples_drawn", stats.samples_drawn},
                  {"nodes_peeled", stats.nodes_peeled},
                  {"wall_ms", stats.wall_ms}};
    return j;
}

RunReport RunReport::from_json(const ordered_json& j) {
    RunReport r;
    r.command = j.at("command").get<std::string>();
    const auto& graph = j.at("graph");
    r.source = graph.at("source").get<std::string>();
    r.nodes = graph.at("n").get<std::uint64_t>();
    r.edges = graph.at("m").get<std::uint64_t>();
    r.max_degree = graph.at("max_degree").get<std::uint32_t>();
    const auto& params = j.at("params");
    r.mode = params.at("mode").get<std::string>();
    r.epsilon = params.at("epsilon").get<double>();
    r.c = params.at("c").get<double>();
    r.seed = params.at("seed").get<std::uint64_t>();
    r.lower_start = params.at("lower_start").get<bool>();
    r.leaps = params.at("leaps").get<bool>();
    r.round_labels = params.at("round_labels").get<bool>();
    const auto& res = j.at("result");
    r.value = res.at("value").get<double>();
    r.used_fallback = res.at("used_fallback").get<bool>();
    if (res.contains("labels_path")) r.labels_path = res.at("labels_path").get<std::string>();
    if (res.contains("min_label")) r.min_label = res.at("min_label").get<double>();
    if (res.contains("mean_label")) r.mean_label = res.at("mean_label").get<double>();
    if (j.contains("exact_value")) r.exact_value = j.at("exact_value").get<double>();
    if (j.contains("error_factor")) r.error_factor = j.at("error_factor").get<double>();
    const auto& stats = j.at("stats");
    r.stats.trials = stats.at("trials").get<std::uint64_t>();
    r.stats.samples_drawn = stats.at("samples_drawn").get<std::uint64_t>();
    r.stats.nodes_peeled = stats.at("nodes_peeled").get<std::uint64_t>();
    r.stats.wall_ms = stats.at("wall_ms").get<double>();
    return r;
}

} // namespace coresample
