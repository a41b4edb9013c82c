#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "birank/graph.hpp"

namespace birank {

/// Dense index <-> opaque string id, in first-appearance order.
class IdMap {
public:
    /// Index of `id`, inserting it at the end when unseen.
    std::size_t intern(std::string_view id);
    std::optional<std::size_t> find(std::string_view id) const;

    const std::string& name(std::size_t index) const { return names_.at(index); }
    std::size_t size() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

struct LabeledGraph {
    BipartiteGraph graph;
    IdMap u_ids;
    IdMap p_ids;
};

/// One tab-separated record of a data file with its 1-based line number.
struct TsvRecord {
    std::size_t line;
    std::vector<std::string_view> fields;
};

/// Streams the data lines of a UTF-8 TSV file, skipping blank lines and lines starting with '#'.
/// Throws ParseError when the file cannot be opened or holds no data lines.
void read_tsv(const std::string& path, const std::function<void(const TsvRecord&)>& on_record);

/// Parses a finite double; throws ParseError naming `path` and `line` otherwise.
double parse_double(std::string_view text, const std::string& path, std::size_t line);
/// Parses a non-negative integer.
long long parse_integer(std::string_view text, const std::string& path, std::size_t line);

/// Reads `u_id<TAB>p_id<TAB>weight` lines.
LabeledGraph load_edge_list(const std::string& path);

/// Writes the graph in the edge-list format, one line per stored edge in (u, p) order.
/// Weights are written with round-trip precision.
void write_edge_list(std::ostream& out, const LabeledGraph& graph);
void write_edge_list(std::ostream& out, const BipartiteGraph& graph);

/// Reads `id<TAB>value` lines into a map; duplicate ids keep the last value.
std::unordered_map<std::string, double> load_score_file(const std::string& path);

/// Aligns an id->score map with `ids`; ids absent from the map get 0.
QueryVector scores_to_query(std::size_t side, const IdMap& ids,
                            const std::unordered_map<std::string, double>& scores);

}  // namespace birank
