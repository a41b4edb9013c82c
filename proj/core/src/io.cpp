#include "birank/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>

#include "birank/error.hpp"

namespace birank {

std::size_t IdMap::intern(std::string_view id) {
    std::string key(id);
    const auto [it, inserted] = index_.try_emplace(key, names_.size());
    if (inserted) {
        names_.push_back(std::move(key));
    }
    return it->second;
}

std::optional<std::size_t> IdMap::find(std::string_view id) const {
    const auto it = index_.find(std::string(id));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

void read_tsv(const std::string& path, const std::function<void(const TsvRecord&)>& on_record) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(path, 0, "cannot open file");
    }
    std::string line;
    std::size_t line_no = 0;
    std::size_t records = 0;
    TsvRecord record;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line.front() == '#') {
            continue;
        }
        record.line = line_no;
        record.fields.clear();
        std::string_view rest(line);
        while (true) {
            const auto tab = rest.find('\t');
            record.fields.push_back(rest.substr(0, tab));
            if (tab == std::string_view::npos) {
                break;
            }
            rest.remove_prefix(tab + 1);
        }
        on_record(record);
        ++records;
    }
    if (records == 0) {
        throw ParseError(path, 0, "file contains no data lines");
    }
}

double parse_double(std::string_view text, const std::string& path, std::size_t line) {
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || text.empty()) {
        throw ParseError(path, line, "expected a number, got '" + std::string(text) + "'");
    }
    if (!std::isfinite(value)) {
        throw ParseError(path, line, "value must be finite");
    }
    return value;
}

long long parse_integer(std::string_view text, const std::string& path, std::size_t line) {
    long long value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || text.empty()) {
        throw ParseError(path, line, "expected an integer, got '" + std::string(text) + "'");
    }
    if (value < 0) {
        throw ParseError(path, line, "value must be >= 0");
    }
    return value;
}

LabeledGraph load_edge_list(const std::string& path) {
    LabeledGraph out;
    std::vector<Edge> edges;
    read_tsv(path, [&](const TsvRecord& r) {
        if (r.fields.size() != 3) {
            throw ParseError(path, r.line, "expected 3 tab-separated fields, got " + std::to_string(r.fields.size()));
        }
        if (r.fields[0].empty() || r.fields[1].empty()) {
            throw ParseError(path, r.line, "empty vertex id");
        }
        const double w = parse_double(r.fields[2], path, r.line);
        if (w <= 0.0) {
            throw ParseError(path, r.line, "weight must be > 0");
        }
        edges.push_back({out.u_ids.intern(r.fields[0]), out.p_ids.intern(r.fields[1]), w});
    });
    out.graph = build_bipartite(out.u_ids.size(), out.p_ids.size(), edges);
    return out;
}

namespace {

void write_edges(std::ostream& out, const BipartiteGraph& graph, const std::function<std::string(std::size_t)>& u_name,
                 const std::function<std::string(std::size_t)>& p_name) {
    const auto old_precision = out.precision(std::numeric_limits<double>::max_digits10);
    for (const auto& e : graph.edges()) {
        out << u_name(e.u) << '\t' << p_name(e.p) << '\t' << e.weight << '\n';
    }
    out.precision(old_precision);
}

}  // namespace

void write_edge_list(std::ostream& out, const LabeledGraph& graph) {
    write_edges(
        out, graph.graph, [&](std::size_t i) { return graph.u_ids.name(i); },
        [&](std::size_t j) { return graph.p_ids.name(j); });
}

void write_edge_list(std::ostream& out, const BipartiteGraph& graph) {
    write_edges(
        out, graph, [](std::size_t i) { return "u" + std::to_string(i); },
        [](std::size_t j) { return "p" + std::to_string(j); });
}

std::unordered_map<std::string, double> load_score_file(const std::string& path) {
    std::unordered_map<std::string, double> scores;
    read_tsv(path, [&](const TsvRecord& r) {
        if (r.fields.size() != 2) {
            throw ParseError(path, r.line, "expected 2 tab-separated fields, got " + std::to_string(r.fields.size()));
        }
        scores[std::string(r.fields[0])] = parse_double(r.fields[1], path, r.line);
    });
    return scores;
}

QueryVector scores_to_query(std::size_t side, const IdMap& ids, const std::unordered_map<std::string, double>& scores) {
    QueryVector q = QueryVector::zeros(side, ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (const auto it = scores.find(ids.name(i)); it != scores.end()) {
            q.scores[i] = it->second;
        }
    }
    return q;
}

}  // namespace birank
