#include "birank/eval.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "birank/error.hpp"

namespace birank {

RankedList RankedList::from_scores(std::span<const std::string> ids, std::span<const double> scores) {
    if (ids.size() != scores.size()) {
        throw DimensionError("ids and scores differ in length");
    }
    RankedList list;
    list.entries.reserve(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
        list.entries.push_back({ids[i], scores[i]});
    }
    std::sort(list.entries.begin(), list.entries.end(), [](const RankedEntry& a, const RankedEntry& b) {
        return a.score != b.score ? a.score > b.score : a.id < b.id;
    });
    return list;
}

void RankedList::validate() const {
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i > 0 && entries[i].score > entries[i - 1].score) {
            throw ConfigError("ranked list scores increase at position " + std::to_string(i + 1));
        }
        if (!seen.insert(entries[i].id).second) {
            throw ConfigError("ranked list repeats id '" + entries[i].id + "'");
        }
    }
}

std::vector<double> average_ranks(std::span<const double> values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
    std::vector<double> ranks(values.size());
    std::size_t start = 0;
    while (start < order.size()) {
        std::size_t end = start + 1;
        while (end < order.size() && values[order[end]] == values[order[start]]) {
            ++end;
        }
        // Positions start..end-1 hold ranks start+1..end.
        const double avg = (static_cast<double>(start + 1) + static_cast<double>(end)) / 2.0;
        for (std::size_t k = start; k < end; ++k) {
            ranks[order[k]] = avg;
        }
        start = end;
    }
    return ranks;
}

double spearman_correlation(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw DimensionError("spearman: samples differ in length");
    }
    if (x.size() < 2) {
        throw ConfigError("spearman needs at least 2 values");
    }
    const auto rx = average_ranks(x);
    const auto ry = average_ranks(y);
    const double n = static_cast<double>(x.size());
    const double mean = (n + 1.0) / 2.0;
    double sxy = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        const double dx = rx[i] - mean;
        const double dy = ry[i] - mean;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        return 0.0;
    }
    return sxy / std::sqrt(sxx * syy);
}

double spearman(const RankedList& predicted, const std::unordered_map<std::string, double>& truth) {
    std::vector<double> pred;
    std::vector<double> actual;
    pred.reserve(predicted.size());
    actual.reserve(predicted.size());
    for (const auto& e : predicted.entries) {
        const auto it = truth.find(e.id);
        if (it == truth.end()) {
            throw ConfigError("spearman: no truth value for id '" + e.id + "'");
        }
        pred.push_back(e.score);
        actual.push_back(it->second);
    }
    return spearman_correlation(pred, actual);
}

namespace {

void check_k(std::size_t k) {
    if (k < 1) {
        throw ConfigError("K must be >= 1");
    }
}

}  // namespace

std::optional<double> hit_ratio_at_k(const RankedList& recommendations, const std::unordered_set<std::string>& held_out,
                                     std::size_t k) {
    check_k(k);
    if (held_out.empty()) {
        return std::nullopt;
    }
    const std::size_t depth = std::min(k, recommendations.size());
    std::size_t hits = 0;
    for (std::size_t i = 0; i < depth; ++i) {
        hits += held_out.contains(recommendations.entries[i].id) ? 1 : 0;
    }
    return static_cast<double>(hits) / static_cast<double>(held_out.size());
}

std::optional<double> ndcg_at_k(const RankedList& recommendations, const std::unordered_set<std::string>& held_out,
                                std::size_t k) {
    check_k(k);
    if (held_out.empty()) {
        return std::nullopt;
    }
    const std::size_t depth = std::min(k, recommendations.size());
    double dcg = 0.0;
    for (std::size_t i = 0; i < depth; ++i) {
        if (held_out.contains(recommendations.entries[i].id)) {
            dcg += 1.0 / std::log2(static_cast<double>(i) + 2.0);
        }
    }
    const std::size_t ideal_hits = std::min(held_out.size(), k);
    double idcg = 0.0;
    for (std::size_t i = 0; i < ideal_hits; ++i) {
        idcg += 1.0 / std::log2(static_cast<double>(i) + 2.0);
    }
    return dcg / idcg;
}

namespace {

std::vector<std::vector<Review>> group_by_user(std::span<const Review> reviews) {
    std::unordered_map<std::string, std::size_t> slot;
    std::vector<std::vector<Review>> groups;
    for (const auto& r : reviews) {
        const auto [it, inserted] = slot.try_emplace(r.user_id, groups.size());
        if (inserted) {
            groups.emplace_back();
        }
        groups[it->second].push_back(r);
    }
    return groups;
}

}  // namespace

Split chronological_split(std::span<const Review> reviews) {
    Split out;
    for (auto& group : group_by_user(reviews)) {
        std::stable_sort(group.begin(), group.end(), [](const Review& a, const Review& b) { return a.time < b.time; });
        const std::size_t n = group.size();
        const std::size_t n_train = n * 8 / 10;
        const std::size_t n_validation = n / 10;
        for (std::size_t k = 0; k < n; ++k) {
            auto& dst = k < n_train ? out.train : (k < n_train + n_validation ? out.validation : out.test);
            dst.push_back(std::move(group[k]));
        }
    }
    return out;
}

std::vector<Review> filter_min_reviews(std::span<const Review> reviews, std::size_t min_reviews) {
    std::unordered_map<std::string, std::size_t> counts;
    for (const auto& r : reviews) {
        ++counts[r.user_id];
    }
    std::vector<Review> out;
    for (const auto& r : reviews) {
        if (counts[r.user_id] >= min_reviews) {
            out.push_back(r);
        }
    }
    return out;
}

}  // namespace birank
