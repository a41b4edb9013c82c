#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace birank {

struct RankedEntry {
    std::string id;
    double score = 0.0;
};

/// Ranking output: scores non-increasing, ids unique.
struct RankedList {
    std::vector<RankedEntry> entries;

    /// Sorts by score descending, ties by id ascending.
    static RankedList from_scores(std::span<const std::string> ids, std::span<const double> scores);

    /// Throws ConfigError when the ordering or uniqueness invariant is violated.
    void validate() const;
    std::size_t size() const noexcept { return entries.size(); }
};

/// Ranks of `values` with 1 for the largest; tied values share the average of their ranks.
std::vector<double> average_ranks(std::span<const double> values);

/// Spearman correlation of two equally long samples (Pearson correlation of their average ranks).
/// Returns 0 when either sample is constant. Throws ConfigError for fewer than 2 values.
double spearman_correlation(std::span<const double> x, std::span<const double> y);

/// Spearman correlation between predicted scores and ground-truth values of the same ids.
/// Throws ConfigError when a predicted id has no truth value or fewer than 2 ids are ranked.
double spearman(const RankedList& predicted, const std::unordered_map<std::string, double>& truth);

/// Fraction of held-out ids found in the first k entries. nullopt when nothing is held out.
std::optional<double> hit_ratio_at_k(const RankedList& recommendations, const std::unordered_set<std::string>& held_out,
                                     std::size_t k);

/// Binary-relevance NDCG with gain 1 / log2(position + 1). nullopt when nothing is held out.
std::optional<double> ndcg_at_k(const RankedList& recommendations, const std::unordered_set<std::string>& held_out,
                                std::size_t k);

struct Review {
    std::string user_id;
    std::string item_id;
    std::string aspect_id;
    double rating = 1.0;
    long long time = 0;
};

struct Split {
    std::vector<Review> train;
    std::vector<Review> validation;
    std::vector<Review> test;
};

/**
 * Per user, orders reviews by time (stable for equal times) and assigns the
 * first floor(0.8 n) to train, the next floor(0.1 n) to validation and the
 * remainder to test. Users appear in the output in first-appearance order.
 */
Split chronological_split(std::span<const Review> reviews);

/// Keeps only users with at least `min_reviews` reviews.
std::vector<Review> filter_min_reviews(std::span<const Review> reviews, std::size_t min_reviews);

}  // namespace birank
