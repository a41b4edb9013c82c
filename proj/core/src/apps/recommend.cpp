#include "birank/apps/recommend.hpp"

#include <cmath>
#include <map>
#include <set>
#include <tuple>
#include <string>
#include <utility>

#include "birank/error.hpp"
#include "birank/normalize.hpp"

namespace birank::apps {

namespace {

void check_rating(const RatingTriple& t) {
    if (!std::isfinite(t.rating) || t.rating <= 0.0) {
        throw InputError("rating of (" + t.user_id + ", " + t.item_id + ") must be finite and > 0");
    }
}

void l1_normalize(std::vector<double>& v) {
    double total = 0.0;
    for (double x : v) {
        total += x;
    }
    if (total > 0.0) {
        for (double& x : v) {
            x /= total;
        }
    }
}

RankedList top_k(const IdMap& ids, std::span<const double> scores, std::size_t k,
                 const std::vector<bool>* excluded = nullptr) {
    std::vector<std::string> names;
    std::vector<double> kept;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (excluded == nullptr || !(*excluded)[i]) {
            names.push_back(ids.name(i));
            kept.push_back(scores[i]);
        }
    }
    auto list = RankedList::from_scores(names, kept);
    if (list.entries.size() > k) {
        list.entries.resize(k);
    }
    return list;
}

}  // namespace

LabeledGraph build_rating_graph(std::span<const RatingTriple> triples) {
    LabeledGraph out;
    std::map<std::pair<std::size_t, std::size_t>, double> latest;
    for (const auto& t : triples) {
        check_rating(t);
        latest[{out.u_ids.intern(t.user_id), out.p_ids.intern(t.item_id)}] = t.rating;
    }
    std::vector<Edge> edges;
    edges.reserve(latest.size());
    for (const auto& [key, rating] : latest) {
        edges.push_back({key.first, key.second, rating});
    }
    out.graph = build_bipartite(out.u_ids.size(), out.p_ids.size(), edges);
    return out;
}

RecommendationData build_tripartite_graph(std::span<const RatingTriple> triples, std::span<const std::string> extra_users) {
    RecommendationData data;
    std::map<std::pair<std::size_t, std::size_t>, double> ratings;
    // Distinct (user, item, aspect) mentions.
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> mentions;
    for (const auto& t : triples) {
        check_rating(t);
        const std::size_t u = data.users.intern(t.user_id);
        const std::size_t p = data.items.intern(t.item_id);
        ratings[{u, p}] = t.rating;
        if (t.aspect_id.has_value()) {
            mentions.insert({u, p, data.aspects.intern(*t.aspect_id)});
        }
    }
    for (const auto& name : extra_users) {
        data.users.intern(name);
    }

    std::map<std::pair<std::size_t, std::size_t>, double> user_aspect_freq;
    std::map<std::pair<std::size_t, std::size_t>, double> item_aspect_freq;
    for (const auto& [u, p, a] : mentions) {
        user_aspect_freq[{u, a}] += 1.0;
        item_aspect_freq[{p, a}] += 1.0;
    }

    std::vector<Edge> rating_edges;
    std::vector<RelationEdge> user_item;
    for (const auto& [key, r] : ratings) {
        rating_edges.push_back({key.first, key.second, r});
        user_item.push_back({key.first, key.second, r});
    }
    std::vector<RelationEdge> user_aspect;
    std::vector<Triplet> user_aspect_triplets;
    for (const auto& [key, f] : user_aspect_freq) {
        const double w = std::log1p(f);
        user_aspect.push_back({key.first, key.second, w});
        user_aspect_triplets.push_back({key.first, key.second, w});
    }
    std::vector<RelationEdge> item_aspect;
    for (const auto& [key, f] : item_aspect_freq) {
        item_aspect.push_back({key.first, key.second, std::log1p(f)});
    }

    data.ratings = build_bipartite(data.users.size(), data.items.size(), rating_edges);
    std::map<PartitionPair, std::vector<RelationEdge>> relations;
    if (!user_item.empty()) {
        relations[{kUserPartition, kItemPartition}] = std::move(user_item);
    }
    if (!user_aspect.empty()) {
        relations[{kUserPartition, kAspectPartition}] = std::move(user_aspect);
    }
    if (!item_aspect.empty()) {
        relations[{kItemPartition, kAspectPartition}] = std::move(item_aspect);
    }
    data.tripartite = build_npartite({data.items.size(), data.users.size(), data.aspects.size()}, relations);
    data.user_aspect =
        CsrMatrix::from_triplets(data.users.size(), data.aspects.size(), std::move(user_aspect_triplets));
    return data;
}

PersonalizationVectors personalization_vectors(const std::string& target_user, const RecommendationData& data) {
    const auto target = data.users.find(target_user);
    if (!target.has_value()) {
        throw InputError("unknown user '" + target_user + "'");
    }
    PersonalizationVectors v{QueryVector::zeros(kItemPartition, data.items.size()),
                             QueryVector::zeros(kAspectPartition, data.aspects.size()),
                             QueryVector::zeros(kUserPartition, data.users.size())};

    const auto& w = data.ratings.weights();
    const auto item_cols = w.row_cols(*target);
    const auto item_vals = w.row_values(*target);
    for (std::size_t k = 0; k < item_cols.size(); ++k) {
        v.items.scores[item_cols[k]] = item_vals[k];
    }
    const auto aspect_cols = data.user_aspect.row_cols(*target);
    const auto aspect_vals = data.user_aspect.row_values(*target);
    for (std::size_t k = 0; k < aspect_cols.size(); ++k) {
        v.aspects.scores[aspect_cols[k]] = aspect_vals[k];
    }
    v.users.scores[*target] = 1.0;

    l1_normalize(v.items.scores);
    l1_normalize(v.aspects.scores);
    l1_normalize(v.users.scores);
    return v;
}

Recommendation recommend(const std::string& target_user, std::size_t k, const RecommendationData& data,
                         const RecommendConfig& cfg) {
    if (k < 1) {
        throw ConfigError("K must be >= 1");
    }
    const auto q = personalization_vectors(target_user, data);
    const std::size_t target = *data.users.find(target_user);

    std::vector<bool> rated(data.items.size(), false);
    for (std::size_t j : data.ratings.weights().row_cols(target)) {
        rated[j] = true;
    }

    Recommendation out;
    if (!cfg.use_aspects) {
        RankConfig rc;
        rc.alpha = cfg.alpha;
        rc.beta = cfg.beta;
        rc.max_iters = cfg.max_iters;
        rc.tol = cfg.tol;
        const auto tp = normalize(data.ratings, Scheme::BiRank);
        const QueryVector p0{kPSide, q.items.scores};
        const QueryVector u0{kUSide, q.users.scores};
        const auto result = rank(tp, p0, u0, rc);
        out.items = top_k(data.items, result.p, k, &rated);
        out.iterations = result.iterations;
        out.converged = result.converged;
        return out;
    }

    NPartiteConfig nc = cfg.alphas.empty() ? NPartiteConfig::uniform(data.tripartite, RankConfig::kDefaultAlpha / 2.0)
                                           : NPartiteConfig{cfg.alphas};
    nc.max_iters = cfg.max_iters;
    nc.tol = cfg.tol;
    const std::vector<QueryVector> queries{q.items, q.users, q.aspects};
    const auto result = npartite_rank(data.tripartite, queries, nc);
    out.items = top_k(data.items, result.scores[kItemPartition], k, &rated);
    out.aspects = top_k(data.aspects, result.scores[kAspectPartition], k);
    out.iterations = result.iterations;
    out.converged = result.converged;
    return out;
}

}  // namespace birank::apps
