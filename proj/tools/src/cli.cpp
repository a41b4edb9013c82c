#include "birank_cli/cli.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "birank/error.hpp"
#include "commands.hpp"

namespace birank::cli {

namespace {

void add_iteration_flags(CLI::App& cmd, IterationOptions& it) {
    cmd.add_option("--alpha", it.alpha, "Weight of propagated U scores in the P update")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    cmd.add_option("--beta", it.beta, "Weight of propagated P scores in the U update")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    cmd.add_option("--tol", it.tol, "Stop when the squared change of one iteration is at most this")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd.add_option("--max-iters", it.max_iters, "Iteration cap")->check(CLI::PositiveNumber)->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ranking on weighted bipartite and n-partite graphs", "birank"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions global;
    app.add_option("--seed", global.seed, "Random seed for generate and bench")->capture_default_str();
    app.add_option("--threads", global.threads, "Worker threads for sparse products")
        ->check(CLI::Range(1u, 1024u))
        ->capture_default_str();
    app.add_option("--precision", global.precision, "Significant digits of printed scores")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();

    std::function<int()> action;
    const Streams io{out, err};

    RankOptions rank;
    auto* rank_cmd = app.add_subcommand("rank", "Rank both sides of a bipartite graph");
    rank_cmd->add_option("--graph", rank.graph, "Edge list: u<TAB>p<TAB>weight")->required()->check(CLI::ExistingFile);
    rank_cmd->add_option("--p0", rank.p0, "P query vector: id<TAB>score")->check(CLI::ExistingFile);
    rank_cmd->add_option("--u0", rank.u0, "U query vector: id<TAB>score")->check(CLI::ExistingFile);
    rank_cmd->add_option("--scheme", rank.scheme, "Transition scheme")
        ->check(CLI::IsMember({"hits", "cohits", "bger", "bgrm", "birank"}))
        ->capture_default_str();
    rank_cmd->add_option("--init", rank.init, "Starting vectors")
        ->check(CLI::IsMember({"uniform", "query"}))
        ->capture_default_str();
    rank_cmd->add_option("--out", rank.out, "Output prefix for .u.tsv, .p.tsv, .manifest.json")->required();
    rank_cmd->add_flag("--trace", rank.trace, "Also write <out>.trace.csv with per-iteration diff and objective");
    add_iteration_flags(*rank_cmd, rank.iter);
    rank_cmd->callback([&] { action = [&] { return run_rank(rank, global, io); }; });

    GenerateOptions gen;
    auto* gen_cmd = app.add_subcommand("generate", "Generate a synthetic bipartite graph");
    gen_cmd->add_option("--kind", gen.kind, "Graph family")->required()->check(CLI::IsMember({"random", "powerlaw"}));
    gen_cmd->add_option("--u", gen.u, "U side size")->required();
    gen_cmd->add_option("--p", gen.p, "P side size")->required();
    auto* density = gen_cmd->add_option("--density", gen.density, "Edge probability (random)")->capture_default_str();
    auto* lambda = gen_cmd->add_option("--lambda", gen.lambda, "Degree exponent (powerlaw)")->capture_default_str();
    density->excludes(lambda);
    gen_cmd->add_option("--out", gen.out, "Edge list output (default stdout)");
    gen_cmd->add_option("--manifest", gen.manifest, "Manifest path (default <out>.manifest.json, or stderr)");
    gen_cmd->callback([&] {
        if (gen.kind == "random" && lambda->count() > 0) {
            throw CLI::ValidationError("--lambda", "only applies to --kind powerlaw");
        }
        if (gen.kind == "powerlaw" && density->count() > 0) {
            throw CLI::ValidationError("--density", "only applies to --kind random");
        }
        action = [&] { return run_generate(gen, global, io); };
    });

    PopularityOptions pop;
    auto* pop_cmd = app.add_subcommand("predict-popularity", "Rank items by predicted popularity from comments");
    pop_cmd->add_option("--comments", pop.comments, "user<TAB>item<TAB>time")->required()->check(CLI::ExistingFile);
    pop_cmd->add_option("--friends", pop.friends, "user<TAB>friend count")->check(CLI::ExistingFile);
    pop_cmd->add_option("--views", pop.views, "item<TAB>view count")->check(CLI::ExistingFile);
    pop_cmd->add_option("--t0", pop.t0, "Ranking time; no comment may be later")->required();
    pop_cmd->add_option("--delta", pop.delta, "Decay base in (0, 1)")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    pop_cmd->add_option("--a", pop.a, "Decay slope")->capture_default_str();
    pop_cmd->add_option("--b", pop.b, "Decay offset")->capture_default_str();
    pop_cmd->add_option("--time-unit", pop.time_unit, "Timestamp ticks per time unit")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_iteration_flags(*pop_cmd, pop.iter);
    pop_cmd->add_option("--out", pop.out, "Ranking output (default stdout)");
    pop_cmd->add_option("--manifest", pop.manifest, "Manifest path (default <out>.manifest.json, or stderr)");
    pop_cmd->callback([&] { action = [&] { return run_predict_popularity(pop, global, io); }; });

    RecommendOptions rec;
    auto* rec_cmd = app.add_subcommand("recommend", "Top-K items a user has not rated yet");
    rec_cmd->add_option("--triples", rec.triples, "user<TAB>item[<TAB>aspect]<TAB>rating")
        ->required()
        ->check(CLI::ExistingFile);
    rec_cmd->add_option("--user", rec.user, "Target user id")->required();
    rec_cmd->add_option("--k", rec.k, "List length")->check(CLI::PositiveNumber)->capture_default_str();
    rec_cmd->add_flag("--aspects", rec.aspects, "Rank over users, items and aspects");
    rec_cmd->add_option("--aspects-out", rec.aspects_out, "Top-K aspects output (with --aspects)");
    add_iteration_flags(*rec_cmd, rec.iter);
    rec_cmd->add_option("--out", rec.out, "Ranking output (default stdout)");
    rec_cmd->add_option("--manifest", rec.manifest, "Manifest path (default <out>.manifest.json, or stderr)");
    rec_cmd->callback([&] { action = [&] { return run_recommend(rec, global, io); }; });

    EvalOptions ev;
    auto* ev_cmd = app.add_subcommand("eval", "Score a ranking against ground truth");
    ev_cmd->add_option("--predicted", ev.predicted, "[rank<TAB>]id<TAB>score")->required()->check(CLI::ExistingFile);
    ev_cmd->add_option("--truth", ev.truth, "id<TAB>value for spearman, held-out ids for topk")
        ->required()
        ->check(CLI::ExistingFile);
    ev_cmd->add_option("--metric", ev.metric, "Metric family")
        ->check(CLI::IsMember({"spearman", "topk"}))
        ->capture_default_str();
    ev_cmd->add_option("--k", ev.k, "Cut-off for topk")->check(CLI::PositiveNumber)->capture_default_str();
    ev_cmd->add_option("--out", ev.out, "Metric output (default stdout)");
    ev_cmd->add_option("--manifest", ev.manifest, "Manifest path (default <out>.manifest.json, or stderr)");
    ev_cmd->callback([&] { action = [&] { return run_eval(ev, global, io); }; });

    BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "Time ranking iterations over generated graphs");
    bench_cmd->add_option("--kind", bench.kind, "Graph family")
        ->check(CLI::IsMember({"random", "powerlaw"}))
        ->capture_default_str();
    bench_cmd->add_option("--sizes", bench.sizes, "Comma-separated UxP sizes")->delimiter(',');
    bench_cmd->add_option("--densities", bench.densities, "Comma-separated densities (random)")->delimiter(',');
    bench_cmd->add_option("--lambdas", bench.lambdas, "Comma-separated exponents (powerlaw)")->delimiter(',');
    bench_cmd->add_option("--seeds", bench.seeds, "Comma-separated seeds (default --seed)")->delimiter(',');
    bench_cmd->add_option("--iters", bench.iters, "Timed iterations per graph")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench_cmd->add_option("--alpha", bench.alpha)->check(CLI::Range(0.0, 1.0))->capture_default_str();
    bench_cmd->add_option("--beta", bench.beta)->check(CLI::Range(0.0, 1.0))->capture_default_str();
    bench_cmd->add_option("--out", bench.out, "CSV output (default stdout)");
    bench_cmd->add_option("--manifest", bench.manifest, "Manifest path (default <out>.manifest.json, or stderr)");
    bench_cmd->callback([&] {
        if (bench.kind == "random" && bench.densities.empty() && bench.lambdas.empty()) {
            bench.densities = {0.01};
        }
        if (bench.kind == "powerlaw" && bench.lambdas.empty() && bench.densities.empty()) {
            bench.lambdas = {2.0};
        }
        action = [&] { return run_bench(bench, global, io); };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << "birank 0.1.0\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        err << "run 'birank --help' for usage\n";
        return kExitUsage;
    }

    try {
        return action();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

}  // namespace birank::cli
