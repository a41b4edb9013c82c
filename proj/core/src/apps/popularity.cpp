#include "birank/apps/popularity.hpp"

#include <cmath>
#include <string>

#include "birank/error.hpp"
#include "birank/normalize.hpp"

namespace birank::apps {

void PopularityParams::validate() const {
    if (!(delta > 0.0 && delta < 1.0)) {
        throw ConfigError("delta must be in (0, 1), got " + std::to_string(delta));
    }
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw ConfigError("decay constants must be finite");
    }
    if (!(time_unit > 0.0) || !std::isfinite(time_unit)) {
        throw ConfigError("time unit must be > 0");
    }
}

double temporal_edge_weight(long long t0, long long t, const PopularityParams& params) {
    if (t > t0) {
        throw InputError("comment time " + std::to_string(t) + " is after the ranking time " + std::to_string(t0));
    }
    const double elapsed = static_cast<double>(t0 - t) / params.time_unit;
    return std::pow(params.delta, params.a * elapsed + params.b);
}

LabeledGraph build_popularity_graph(std::span<const CommentRecord> comments, const PopularityParams& params) {
    params.validate();
    if (comments.empty()) {
        throw InputError("no comments");
    }
    LabeledGraph out;
    std::vector<Edge> edges;
    edges.reserve(comments.size());
    for (const auto& c : comments) {
        const double w = temporal_edge_weight(params.t0, c.time, params);
        edges.push_back({out.u_ids.intern(c.user_id), out.p_ids.intern(c.item_id), w});
    }
    out.graph = build_bipartite(out.u_ids.size(), out.p_ids.size(), edges);
    return out;
}

namespace {

QueryVector normalize_or_uniform(std::size_t side, std::vector<double> mass) {
    double total = 0.0;
    for (double m : mass) {
        total += m;
    }
    if (total <= 0.0) {
        return QueryVector::uniform(side, mass.size());
    }
    for (double& m : mass) {
        m /= total;
    }
    return {side, std::move(mass)};
}

}  // namespace

QueryVector user_prior(std::span<const long long> friend_counts) {
    std::vector<double> mass(friend_counts.size());
    for (std::size_t i = 0; i < mass.size(); ++i) {
        if (friend_counts[i] < 0) {
            throw InputError("friend counts must be >= 0");
        }
        mass[i] = std::log1p(static_cast<double>(friend_counts[i]));
    }
    return normalize_or_uniform(kUSide, std::move(mass));
}

QueryVector item_prior(std::span<const long long> view_counts, std::size_t* clamped) {
    std::vector<double> mass(view_counts.size());
    std::size_t low = 0;
    for (std::size_t j = 0; j < mass.size(); ++j) {
        if (view_counts[j] < 1) {
            ++low;
            mass[j] = 0.0;
        } else {
            mass[j] = std::log(static_cast<double>(view_counts[j]));
        }
    }
    if (clamped != nullptr) {
        *clamped = low;
    }
    return normalize_or_uniform(kPSide, std::move(mass));
}

PopularityPrediction predict_popularity(std::span<const CommentRecord> comments,
                                        const std::unordered_map<std::string, long long>& friend_counts,
                                        const std::unordered_map<std::string, long long>& view_counts,
                                        const PopularityParams& params, const RankConfig& cfg) {
    PopularityPrediction out;
    out.graph = build_popularity_graph(comments, params);

    std::vector<long long> friends(out.graph.u_ids.size(), 0);
    for (std::size_t i = 0; i < friends.size(); ++i) {
        if (const auto it = friend_counts.find(out.graph.u_ids.name(i)); it != friend_counts.end()) {
            friends[i] = it->second;
        }
    }
    std::vector<long long> views(out.graph.p_ids.size(), 0);
    for (std::size_t j = 0; j < views.size(); ++j) {
        if (const auto it = view_counts.find(out.graph.p_ids.name(j)); it != view_counts.end()) {
            views[j] = it->second;
        }
    }

    const auto u0 = user_prior(friends);
    const auto p0 = item_prior(views, &out.clamped_views);
    const auto tp = normalize(out.graph.graph, Scheme::BiRank);
    out.rank = rank(tp, p0, u0, cfg);
    out.items = RankedList::from_scores(out.graph.p_ids.names(), out.rank.p);
    return out;
}

}  // namespace birank::apps
