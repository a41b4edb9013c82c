#pragma once

#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "birank/apps/popularity.hpp"
#include "birank/apps/recommend.hpp"
#include "birank/eval.hpp"

namespace birank::cli {

/// `user<TAB>item<TAB>time` lines.
std::vector<apps::CommentRecord> load_comments(const std::string& path);

/// `id<TAB>count` lines; a repeated id keeps its last count.
std::unordered_map<std::string, long long> load_counts(const std::string& path);

/// `user<TAB>item<TAB>rating` or `user<TAB>item<TAB>aspect<TAB>rating` lines.
std::vector<apps::RatingTriple> load_triples(const std::string& path);

/// A ranking file as written by the CLI (`rank<TAB>id<TAB>score`) or plain `id<TAB>score` lines.
/// Entries are re-sorted by score descending, ties by id.
RankedList load_ranking(const std::string& path);

/// First column of every line.
std::unordered_set<std::string> load_id_set(const std::string& path);

}  // namespace birank::cli
