#include "formats.hpp"

#include "birank/error.hpp"
#include "birank/io.hpp"

namespace birank::cli {

namespace {

void expect_fields(const TsvRecord& r, const std::string& path, std::size_t lo, std::size_t hi, const char* layout) {
    if (r.fields.size() < lo || r.fields.size() > hi) {
        throw ParseError(path, r.line, "expected " + std::string(layout) + ", got " + std::to_string(r.fields.size()) +
                                           " fields");
    }
}

void expect_id(std::string_view id, const std::string& path, std::size_t line) {
    if (id.empty()) {
        throw ParseError(path, line, "empty id");
    }
}

}  // namespace

std::vector<apps::CommentRecord> load_comments(const std::string& path) {
    std::vector<apps::CommentRecord> out;
    read_tsv(path, [&](const TsvRecord& r) {
        expect_fields(r, path, 3, 3, "user<TAB>item<TAB>time");
        expect_id(r.fields[0], path, r.line);
        expect_id(r.fields[1], path, r.line);
        out.push_back({std::string(r.fields[0]), std::string(r.fields[1]), parse_integer(r.fields[2], path, r.line)});
    });
    return out;
}

std::unordered_map<std::string, long long> load_counts(const std::string& path) {
    std::unordered_map<std::string, long long> out;
    read_tsv(path, [&](const TsvRecord& r) {
        expect_fields(r, path, 2, 2, "id<TAB>count");
        expect_id(r.fields[0], path, r.line);
        out[std::string(r.fields[0])] = parse_integer(r.fields[1], path, r.line);
    });
    return out;
}

std::vector<apps::RatingTriple> load_triples(const std::string& path) {
    std::vector<apps::RatingTriple> out;
    read_tsv(path, [&](const TsvRecord& r) {
        expect_fields(r, path, 3, 4, "user<TAB>item[<TAB>aspect]<TAB>rating");
        for (std::size_t k = 0; k + 1 < r.fields.size(); ++k) {
            expect_id(r.fields[k], path, r.line);
        }
        apps::RatingTriple t;
        t.user_id = std::string(r.fields[0]);
        t.item_id = std::string(r.fields[1]);
        if (r.fields.size() == 4) {
            t.aspect_id = std::string(r.fields[2]);
        }
        t.rating = parse_double(r.fields.back(), path, r.line);
        if (t.rating <= 0.0) {
            throw ParseError(path, r.line, "rating must be > 0");
        }
        out.push_back(std::move(t));
    });
    return out;
}

RankedList load_ranking(const std::string& path) {
    std::vector<std::string> ids;
    std::vector<double> scores;
    std::unordered_set<std::string> seen;
    read_tsv(path, [&](const TsvRecord& r) {
        expect_fields(r, path, 2, 3, "[rank<TAB>]id<TAB>score");
        const std::string_view id = r.fields[r.fields.size() - 2];
        expect_id(id, path, r.line);
        if (!seen.emplace(id).second) {
            throw ParseError(path, r.line, "duplicate id '" + std::string(id) + "'");
        }
        ids.emplace_back(id);
        scores.push_back(parse_double(r.fields.back(), path, r.line));
    });
    return RankedList::from_scores(ids, scores);
}

std::unordered_set<std::string> load_id_set(const std::string& path) {
    std::unordered_set<std::string> out;
    read_tsv(path, [&](const TsvRecord& r) {
        expect_id(r.fields[0], path, r.line);
        out.emplace(r.fields[0]);
    });
    return out;
}

}  // namespace birank::cli
