#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "birank/eval.hpp"
#include "birank/graph.hpp"
#include "birank/io.hpp"
#include "birank/rank.hpp"

namespace birank::apps {

struct CommentRecord {
    std::string user_id;
    std::string item_id;
    long long time = 0;
};

struct PopularityParams {
    /// Decay base, in (0, 1).
    double delta = 0.85;
    double a = 1.0;
    double b = 0.0;
    /// Ranking time; no comment may be later.
    long long t0 = 0;
    /// Raw timestamp ticks per time unit (1 = timestamps are already in days).
    double time_unit = 1.0;

    void validate() const;
};

/// delta^(a (t0 - t) / time_unit + b). Throws InputError for comments after t0.
double temporal_edge_weight(long long t0, long long t, const PopularityParams& params);

/// User-item graph whose edge weight is the summed decayed weight of every comment on the pair.
LabeledGraph build_popularity_graph(std::span<const CommentRecord> comments, const PopularityParams& params);

/// log(1 + g_i) / sum_k log(1 + g_k); uniform when nobody has friends.
QueryVector user_prior(std::span<const long long> friend_counts);

/// log(v_j) / sum_k log(v_k). Counts below 1 are treated as 1 and tallied in `clamped`.
/// Uniform when every item has at most one view.
QueryVector item_prior(std::span<const long long> view_counts, std::size_t* clamped = nullptr);

struct PopularityPrediction {
    RankedList items;
    LabeledGraph graph;
    RankResult rank;
    /// Items whose view count was missing or below 1.
    std::size_t clamped_views = 0;
};

/// Ranks items by predicted popularity: comment graph + friend and view priors, birank scheme.
PopularityPrediction predict_popularity(std::span<const CommentRecord> comments,
                                        const std::unordered_map<std::string, long long>& friend_counts,
                                        const std::unordered_map<std::string, long long>& view_counts,
                                        const PopularityParams& params, const RankConfig& cfg = {});

}  // namespace birank::apps
