#include <chrono>
#include <ostream>

#include "birank/apps/popularity.hpp"
#include "birank/apps/recommend.hpp"
#include "commands.hpp"
#include "formats.hpp"
#include "output.hpp"

namespace birank::cli {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

nlohmann::json iteration_parameters(const IterationOptions& it) {
    return {{"alpha", it.alpha}, {"beta", it.beta}, {"tol", it.tol}, {"max_iters", it.max_iters}};
}

}  // namespace

int run_predict_popularity(const PopularityOptions& opts, const GlobalOptions& global, Streams io) {
    const auto start = std::chrono::steady_clock::now();
    const auto comments = load_comments(opts.comments);
    const auto friends = opts.friends.empty() ? std::unordered_map<std::string, long long>{} : load_counts(opts.friends);
    const auto views = opts.views.empty() ? std::unordered_map<std::string, long long>{} : load_counts(opts.views);

    apps::PopularityParams params;
    params.delta = opts.delta;
    params.a = opts.a;
    params.b = opts.b;
    params.t0 = opts.t0;
    params.time_unit = opts.time_unit;

    RankConfig cfg;
    cfg.alpha = opts.iter.alpha;
    cfg.beta = opts.iter.beta;
    cfg.tol = opts.iter.tol;
    cfg.max_iters = opts.iter.max_iters;
    cfg.threads = global.threads;

    const auto prediction = apps::predict_popularity(comments, friends, views, params, cfg);
    {
        OutputFile f(opts.out, io.out);
        write_ranking(f.stream(), prediction.items, global.precision);
    }

    auto manifest = base_manifest("predict-popularity", global);
    auto parameters = iteration_parameters(opts.iter);
    parameters.update({{"t0", opts.t0}, {"delta", opts.delta}, {"a", opts.a}, {"b", opts.b},
                       {"time_unit", opts.time_unit}});
    manifest["parameters"] = parameters;
    manifest["inputs"] = nlohmann::json{{"comments", opts.comments}, {"friends", opts.friends}, {"views", opts.views}};
    manifest["outputs"] = nlohmann::json{{"ranking", opts.out.empty() ? "-" : opts.out}};
    manifest["graph"] = nlohmann::json{{"users", prediction.graph.graph.u_count()},
                         {"items", prediction.graph.graph.p_count()},
                         {"edges", prediction.graph.graph.edge_count()}};
    manifest["clamped_views"] = prediction.clamped_views;
    manifest["result"] = nlohmann::json{{"iterations", prediction.rank.iterations}, {"converged", prediction.rank.converged}};
    manifest["timing"] = timing_summary(prediction.rank.iteration_seconds, seconds_since(start));
    emit_manifest(manifest, opts.manifest, opts.out, io.err);
    if (prediction.clamped_views > 0) {
        io.err << "warning: " << prediction.clamped_views << " items had a view count below 1 and were treated as 1\n";
    }
    return 0;
}

int run_recommend(const RecommendOptions& opts, const GlobalOptions& global, Streams io) {
    const auto start = std::chrono::steady_clock::now();
    const auto triples = load_triples(opts.triples);
    const auto data = apps::build_tripartite_graph(triples);

    apps::RecommendConfig cfg;
    cfg.use_aspects = opts.aspects;
    cfg.alpha = opts.iter.alpha;
    cfg.beta = opts.iter.beta;
    cfg.tol = opts.iter.tol;
    cfg.max_iters = opts.iter.max_iters;
    const auto rec = apps::recommend(opts.user, opts.k, data, cfg);
    {
        OutputFile f(opts.out, io.out);
        write_ranking(f.stream(), rec.items, global.precision);
    }
    if (opts.aspects && !opts.aspects_out.empty()) {
        OutputFile f(opts.aspects_out, io.out);
        write_ranking(f.stream(), rec.aspects, global.precision);
    }

    auto manifest = base_manifest("recommend", global);
    auto parameters = iteration_parameters(opts.iter);
    parameters.update({{"user", opts.user}, {"k", opts.k}, {"aspects", opts.aspects}});
    manifest["parameters"] = parameters;
    manifest["inputs"] = nlohmann::json{{"triples", opts.triples}};
    manifest["outputs"] = nlohmann::json{{"items", opts.out.empty() ? "-" : opts.out}};
    if (!opts.aspects_out.empty()) {
        manifest["outputs"]["aspects"] = opts.aspects_out;
    }
    manifest["graph"] = nlohmann::json{{"users", data.users.size()}, {"items", data.items.size()}, {"aspects", data.aspects.size()}};
    manifest["result"] = nlohmann::json{{"iterations", rec.iterations}, {"converged", rec.converged}};
    manifest["timing"] = nlohmann::json{{"total_seconds", seconds_since(start)}};
    emit_manifest(manifest, opts.manifest, opts.out, io.err);
    return 0;
}

}  // namespace birank::cli
