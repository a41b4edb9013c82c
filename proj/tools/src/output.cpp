#include "output.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <ostream>

#include "birank/error.hpp"

namespace birank::cli {

OutputFile::OutputFile(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty() || path == "-") {
        return;
    }
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
    if (!*file_) {
        throw Error("cannot open '" + path + "' for writing");
    }
    stream_ = file_.get();
}

std::string format_score(double value, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, value);
    return buf;
}

void write_ranking(std::ostream& out, const RankedList& list, int precision) {
    std::size_t position = 1;
    for (const auto& e : list.entries) {
        out << position++ << '\t' << e.id << '\t' << format_score(e.score, precision) << '\n';
    }
}

nlohmann::json base_manifest(const std::string& subcommand, const GlobalOptions& global) {
    return {{"subcommand", subcommand},
            {"seed", global.seed},
            {"threads", global.threads},
            {"precision", global.precision}};
}

nlohmann::json timing_summary(std::span<const double> iteration_seconds, double total_seconds) {
    nlohmann::json t{{"total_seconds", total_seconds},
                     {"iterations", iteration_seconds.size()},
                     {"per_iteration_seconds", std::vector<double>(iteration_seconds.begin(), iteration_seconds.end())}};
    if (!iteration_seconds.empty()) {
        std::vector<double> sorted(iteration_seconds.begin(), iteration_seconds.end());
        std::sort(sorted.begin(), sorted.end());
        t["median_iteration_seconds"] = sorted[sorted.size() / 2];
        t["mean_iteration_seconds"] =
            std::accumulate(sorted.begin(), sorted.end(), 0.0) / static_cast<double>(sorted.size());
    }
    return t;
}

void emit_manifest(const nlohmann::json& manifest, const std::string& manifest_path, const std::string& out_path,
                   std::ostream& fallback) {
    std::string path = manifest_path;
    if (path.empty() && !out_path.empty() && out_path != "-") {
        path = out_path + ".manifest.json";
    }
    OutputFile file(path, fallback);
    file.stream() << manifest.dump(2) << '\n';
}

}  // namespace birank::cli
