#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "birank/eval.hpp"
#include "birank/graph.hpp"
#include "birank/io.hpp"
#include "birank/npartite.hpp"
#include "birank/rank.hpp"

namespace birank::apps {

struct RatingTriple {
    std::string user_id;
    std::string item_id;
    std::optional<std::string> aspect_id;
    double rating = 1.0;
};

/// User-item graph weighted by rating; a repeated (user, item) pair keeps its last rating.
/// Throws InputError for ratings that are not finite and > 0.
LabeledGraph build_rating_graph(std::span<const RatingTriple> triples);

/// Partition order of the user-item-aspect graph.
inline constexpr std::size_t kItemPartition = 0;
inline constexpr std::size_t kUserPartition = 1;
inline constexpr std::size_t kAspectPartition = 2;

/**
 * Everything a recommendation run needs, built once and shared by all target users.
 *
 * Each triple <u, p, a> forms a triangle. User-item weights are ratings (last
 * one wins); user-aspect and item-aspect weights are log(1 + f), where f
 * counts the distinct items (resp. users) behind the mention.
 */
struct RecommendationData {
    IdMap users;
    IdMap items;
    IdMap aspects;
    /// Users x items ratings.
    BipartiteGraph ratings;
    /// Items, users, aspects (see k*Partition).
    NPartiteGraph tripartite;
    /// Users x aspects, same weights as the tripartite relation.
    CsrMatrix user_aspect;
};

/// `extra_users` are registered even when they have no triples.
RecommendationData build_tripartite_graph(std::span<const RatingTriple> triples,
                                          std::span<const std::string> extra_users = {});

struct PersonalizationVectors {
    QueryVector items;
    QueryVector aspects;
    QueryVector users;
};

/// Target's rating row, aspect row and one-hot indicator, each L1-normalized (zero rows stay zero).
/// Throws InputError for an unknown user.
PersonalizationVectors personalization_vectors(const std::string& target_user, const RecommendationData& data);

struct RecommendConfig {
    /// Rank over users, items and aspects instead of the user-item graph alone.
    bool use_aspects = false;
    /// Item and user propagation weights of the bipartite run.
    double alpha = RankConfig::kDefaultAlpha;
    double beta = RankConfig::kDefaultBeta;
    /// Propagation weights of the tripartite run; empty selects every connected pair at 0.85 / 2.
    std::vector<std::vector<double>> alphas;
    int max_iters = RankConfig::kDefaultMaxIters;
    double tol = RankConfig::kDefaultTol;
};

struct Recommendation {
    /// Top-K unrated items, score descending then id ascending.
    RankedList items;
    /// Top-K aspects by score (tripartite runs only).
    RankedList aspects;
    int iterations = 0;
    bool converged = false;
};

/// Ranks the items the target has not rated yet. Throws ConfigError for k < 1.
Recommendation recommend(const std::string& target_user, std::size_t k, const RecommendationData& data,
                         const RecommendConfig& cfg = {});

}  // namespace birank::apps
