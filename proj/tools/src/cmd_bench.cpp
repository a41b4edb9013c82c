#include <algorithm>
#include <chrono>
#include <charconv>
#include <ostream>

#include "birank/generators.hpp"
#include "birank/normalize.hpp"
#include "birank/rank.hpp"
#include "commands.hpp"
#include "output.hpp"

namespace birank::cli {

namespace {

std::pair<std::size_t, std::size_t> parse_size(const std::string& text) {
    const auto x = text.find_first_of("xX");
    std::size_t u = 0;
    std::size_t p = 0;
    if (x == std::string::npos) {
        throw UsageError("size '" + text + "' is not of the form UxP");
    }
    const char* begin = text.data();
    const char* mid = begin + x;
    const char* end = begin + text.size();
    const auto ru = std::from_chars(begin, mid, u);
    const auto rp = std::from_chars(mid + 1, end, p);
    if (ru.ec != std::errc{} || ru.ptr != mid || rp.ec != std::errc{} || rp.ptr != end || u == 0 || p == 0) {
        throw UsageError("size '" + text + "' is not of the form UxP with positive counts");
    }
    return {u, p};
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

int run_bench(const BenchOptions& opts, const GlobalOptions& global, Streams io) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<std::pair<std::size_t, std::size_t>> sizes;
    for (const auto& s : opts.sizes) {
        sizes.push_back(parse_size(s));
    }
    const bool random = opts.kind == "random";
    const auto params = random ? opts.densities : opts.lambdas;
    const auto seeds = opts.seeds.empty() ? std::vector<std::uint64_t>{global.seed} : opts.seeds;
    if (sizes.empty() || params.empty()) {
        throw UsageError("empty sweep: give at least one --sizes entry and one " +
                         std::string(random ? "--densities" : "--lambdas") + " value");
    }

    OutputFile f(opts.out, io.out);
    f.stream() << "u,p,kind,param,seed,edges,iterations,seconds_per_iteration\n";
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [u, p] : sizes) {
        for (double param : params) {
            for (std::uint64_t seed : seeds) {
                GenSpec spec;
                spec.u_count = u;
                spec.p_count = p;
                spec.seed = seed;
                if (random) {
                    spec.kind = RandomKind{param};
                } else {
                    spec.kind = PowerLawKind{param};
                }
                const auto graph = generate(spec);
                const auto tp = normalize(graph, Scheme::BiRank);
                RankConfig cfg;
                cfg.alpha = opts.alpha;
                cfg.beta = opts.beta;
                cfg.max_iters = opts.iters;
                cfg.tol = 1e-300;
                cfg.threads = global.threads;
                const auto result = rank(tp, QueryVector::uniform(kPSide, p), QueryVector::uniform(kUSide, u), cfg);
                const double per_iter = median(result.iteration_seconds);
                f.stream() << u << ',' << p << ',' << opts.kind << ',' << format_score(param, 6) << ',' << seed << ','
                           << graph.edge_count() << ',' << result.iterations << ',' << format_score(per_iter, 6)
                           << '\n';
                rows.push_back({{"u", u}, {"p", p}, {"param", param}, {"seed", seed},
                                {"edges", graph.edge_count()}, {"seconds_per_iteration", per_iter},
                                {"per_iteration_seconds", result.iteration_seconds}});
            }
        }
    }

    auto manifest = base_manifest("bench", global);
    manifest["parameters"] = nlohmann::json{{"kind", opts.kind}, {"sizes", opts.sizes}, {"params", params},
                              {"seeds", seeds},    {"iters", opts.iters}, {"alpha", opts.alpha},
                              {"beta", opts.beta}};
    manifest["outputs"] = nlohmann::json{{"csv", opts.out.empty() ? "-" : opts.out}};
    manifest["runs"] = rows;
    manifest["timing"] = nlohmann::json{{"total_seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
    emit_manifest(manifest, opts.manifest, opts.out, io.err);
    return 0;
}

}  // namespace birank::cli
