#include <chrono>
#include <optional>
#include <ostream>

#include "birank/error.hpp"
#include "birank/eval.hpp"
#include "birank/io.hpp"
#include "commands.hpp"
#include "formats.hpp"
#include "output.hpp"

namespace birank::cli {

int run_eval(const EvalOptions& opts, const GlobalOptions& global, Streams io) {
    const auto start = std::chrono::steady_clock::now();
    const auto predicted = load_ranking(opts.predicted);
    auto manifest = base_manifest("eval", global);
    nlohmann::json metrics = nlohmann::json::object();

    OutputFile f(opts.out, io.out);
    auto emit = [&](const std::string& name, std::optional<double> value) {
        f.stream() << name << '\t' << (value ? format_score(*value, global.precision) : std::string("NA")) << '\n';
        metrics[name] = value ? nlohmann::json(*value) : nlohmann::json(nullptr);
    };

    if (opts.metric == "spearman") {
        const auto truth = load_score_file(opts.truth);
        double rho = 0.0;
        try {
            rho = spearman(predicted, truth);
        } catch (const ConfigError& e) {
            throw InputError(e.what());
        }
        emit("spearman", rho);
    } else {
        const auto held_out = load_id_set(opts.truth);
        const std::string suffix = "@" + std::to_string(opts.k);
        emit("hit_ratio" + suffix, hit_ratio_at_k(predicted, held_out, opts.k));
        emit("ndcg" + suffix, ndcg_at_k(predicted, held_out, opts.k));
    }

    manifest["parameters"] = nlohmann::json{{"metric", opts.metric}, {"k", opts.k}};
    manifest["inputs"] = nlohmann::json{{"predicted", opts.predicted}, {"truth", opts.truth}};
    manifest["outputs"] = nlohmann::json{{"metrics", opts.out.empty() ? "-" : opts.out}};
    manifest["metrics"] = metrics;
    manifest["timing"] = nlohmann::json{{"total_seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
    emit_manifest(manifest, opts.manifest, opts.out, io.err);
    return 0;
}

}  // namespace birank::cli
