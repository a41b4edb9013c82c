#pragma once

#include <fstream>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "birank/eval.hpp"
#include "commands.hpp"

namespace birank::cli {

/// `path` opened for writing, or the fallback stream when `path` is empty or "-".
class OutputFile {
public:
    OutputFile(const std::string& path, std::ostream& fallback);
    std::ostream& stream() { return *stream_; }
    bool is_file() const noexcept { return file_ != nullptr; }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_;
};

/// `%.<precision>g` rendering of a score.
std::string format_score(double value, int precision);

/// `rank<TAB>id<TAB>score` lines, rank starting at 1.
void write_ranking(std::ostream& out, const RankedList& list, int precision);

/// Manifest fields shared by every subcommand.
nlohmann::json base_manifest(const std::string& subcommand, const GlobalOptions& global);

/// Timing summary of a run from its per-iteration wall times.
nlohmann::json timing_summary(std::span<const double> iteration_seconds, double total_seconds);

/// Writes to `manifest_path`, else `<out_path>.manifest.json`, else `fallback`.
void emit_manifest(const nlohmann::json& manifest, const std::string& manifest_path, const std::string& out_path,
                   std::ostream& fallback);

}  // namespace birank::cli
