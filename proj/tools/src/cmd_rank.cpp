#include <chrono>
#include <ostream>
#include <unordered_map>

#include "birank/error.hpp"
#include "birank/io.hpp"
#include "birank/normalize.hpp"
#include "birank/rank.hpp"
#include "commands.hpp"
#include "output.hpp"

namespace birank::cli {

namespace {

QueryVector load_query(const std::string& path, std::size_t side, const IdMap& ids, const char* name,
                       std::ostream& err) {
    if (path.empty()) {
        return QueryVector::uniform(side, ids.size());
    }
    const auto scores = load_score_file(path);
    std::size_t unknown = 0;
    for (const auto& [id, value] : scores) {
        if (!ids.find(id).has_value()) {
            ++unknown;
        }
        if (!(value >= 0.0)) {
            throw InputError(path + ": score of '" + id + "' must be >= 0");
        }
    }
    if (unknown > 0) {
        err << "warning: " << unknown << " " << name << " ids in " << path << " are not in the graph and were ignored\n";
    }
    return scores_to_query(side, ids, scores);
}

}  // namespace

int run_rank(const RankOptions& opts, const GlobalOptions& global, Streams io) {
    const auto start = std::chrono::steady_clock::now();
    const auto labeled = load_edge_list(opts.graph);
    const auto p0 = load_query(opts.p0, kPSide, labeled.p_ids, "P", io.err);
    const auto u0 = load_query(opts.u0, kUSide, labeled.u_ids, "U", io.err);

    RankConfig cfg;
    cfg.alpha = opts.iter.alpha;
    cfg.beta = opts.iter.beta;
    cfg.tol = opts.iter.tol;
    cfg.max_iters = opts.iter.max_iters;
    cfg.init = opts.init == "query" ? Init::Query : Init::Uniform;
    cfg.record_objective = opts.trace;
    cfg.threads = global.threads;

    const auto scheme = parse_scheme(opts.scheme);
    if (!scheme) {
        throw UsageError("unknown scheme '" + opts.scheme + "'");
    }
    const auto tp = normalize(labeled.graph, *scheme);
    const auto result = rank(tp, p0, u0, cfg);
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    const std::string u_path = opts.out + ".u.tsv";
    const std::string p_path = opts.out + ".p.tsv";
    {
        OutputFile f(u_path, io.out);
        write_ranking(f.stream(), RankedList::from_scores(labeled.u_ids.names(), result.u), global.precision);
    }
    {
        OutputFile f(p_path, io.out);
        write_ranking(f.stream(), RankedList::from_scores(labeled.p_ids.names(), result.p), global.precision);
    }

    auto manifest = base_manifest("rank", global);
    manifest["parameters"] = nlohmann::json{{"scheme", opts.scheme},        {"alpha", cfg.alpha}, {"beta", cfg.beta},
                              {"tol", cfg.tol},               {"max_iters", cfg.max_iters},
                              {"init", opts.init}};
    manifest["inputs"] = nlohmann::json{{"graph", opts.graph}, {"p0", opts.p0}, {"u0", opts.u0}};
    manifest["outputs"] = nlohmann::json{{"u", u_path}, {"p", p_path}};
    manifest["graph"] = nlohmann::json{{"u_count", labeled.graph.u_count()},
                         {"p_count", labeled.graph.p_count()},
                         {"edges", labeled.graph.edge_count()}};
    manifest["result"] = nlohmann::json{{"iterations", result.iterations}, {"converged", result.converged}};
    manifest["timing"] = timing_summary(result.iteration_seconds, total);

    if (opts.trace) {
        const std::string trace_path = opts.out + ".trace.csv";
        OutputFile f(trace_path, io.out);
        f.stream() << "iteration,diff,objective,seconds\n";
        for (std::size_t k = 0; k < result.diff_trace.size(); ++k) {
            f.stream() << k + 1 << ',' << format_score(result.diff_trace[k], 17) << ',';
            if (k < result.objective_trace.size()) {
                f.stream() << format_score(result.objective_trace[k], 17);
            }
            f.stream() << ',' << format_score(result.iteration_seconds[k], 6) << '\n';
        }
        manifest["outputs"]["trace"] = trace_path;
    }
    emit_manifest(manifest, opts.out + ".manifest.json", "", io.err);

    if (!result.converged) {
        io.err << "warning: not converged after " << result.iterations << " iterations (last diff "
               << format_score(result.diff_trace.back(), 6) << ")\n";
    }
    return 0;
}

}  // namespace birank::cli
