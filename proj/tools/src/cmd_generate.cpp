#include <chrono>
#include <ostream>

#include "birank/generators.hpp"
#include "birank/io.hpp"
#include "commands.hpp"
#include "output.hpp"

namespace birank::cli {

int run_generate(const GenerateOptions& opts, const GlobalOptions& global, Streams io) {
    const auto start = std::chrono::steady_clock::now();
    GenSpec spec;
    spec.u_count = opts.u;
    spec.p_count = opts.p;
    spec.seed = global.seed;
    auto manifest = base_manifest("generate", global);
    if (opts.kind == "random") {
        spec.kind = RandomKind{opts.density};
        manifest["parameters"] = nlohmann::json{{"kind", "random"}, {"u", opts.u}, {"p", opts.p}, {"density", opts.density}};
    } else {
        spec.kind = PowerLawKind{opts.lambda};
        manifest["parameters"] = nlohmann::json{{"kind", "powerlaw"}, {"u", opts.u}, {"p", opts.p}, {"lambda", opts.lambda}};
    }

    GenerationReport report;
    const auto graph = generate(spec, &report);
    {
        OutputFile f(opts.out, io.out);
        write_edge_list(f.stream(), graph);
    }
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    manifest["outputs"] = nlohmann::json{{"graph", opts.out.empty() ? "-" : opts.out}};
    manifest["graph"] = nlohmann::json{{"u_count", graph.u_count()}, {"p_count", graph.p_count()}, {"edges", graph.edge_count()}};
    if (opts.kind == "powerlaw") {
        manifest["report"] = nlohmann::json{{"truncated_u_demand", report.truncated_u_demand},
                              {"unused_p_capacity", report.unused_p_capacity}};
    }
    manifest["timing"] = nlohmann::json{{"total_seconds", total}};
    emit_manifest(manifest, opts.manifest, opts.out, io.err);
    return 0;
}

}  // namespace birank::cli
