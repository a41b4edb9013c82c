#include "birank/normalize.hpp"

#include "birank/error.hpp"

namespace birank {

std::string_view to_string(Scheme scheme) {
    switch (scheme) {
        case Scheme::HITS: return "hits";
        case Scheme::CoHITS: return "cohits";
        case Scheme::BGER: return "bger";
        case Scheme::BGRM: return "bgrm";
        case Scheme::BiRank: return "birank";
    }
    return "unknown";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
    for (auto s : {Scheme::HITS, Scheme::CoHITS, Scheme::BGER, Scheme::BGRM, Scheme::BiRank}) {
        if (name == to_string(s)) {
            return s;
        }
    }
    return std::nullopt;
}

TransitionPair normalize(const BipartiteGraph& graph, Scheme scheme) {
    const auto du = graph.u_degrees();
    const auto dp = graph.p_degrees();
    const auto& w = graph.weights();
    const auto& wt = graph.weights_transposed();

    // Stored entries always have both endpoint degrees > 0, so no division below sees a zero.
    TransitionPair tp{scheme, {}, {}, graph};
    switch (scheme) {
        case Scheme::HITS:
            tp.forward = w;
            tp.backward = wt;
            break;
        case Scheme::CoHITS:
            tp.forward = w.map_values([&](std::size_t, std::size_t j, double v) { return v / dp[j]; });
            tp.backward = wt.map_values([&](std::size_t, std::size_t i, double v) { return v / du[i]; });
            break;
        case Scheme::BGER:
            tp.forward = w.map_values([&](std::size_t i, std::size_t, double v) { return v / du[i]; });
            tp.backward = wt.map_values([&](std::size_t j, std::size_t, double v) { return v / dp[j]; });
            break;
        case Scheme::BGRM:
            tp.forward = w.map_values([&](std::size_t i, std::size_t j, double v) { return v / (du[i] * dp[j]); });
            tp.backward = wt.map_values([&](std::size_t j, std::size_t i, double v) { return v / (dp[j] * du[i]); });
            break;
        case Scheme::BiRank:
            tp.forward = w.map_values(
                [&](std::size_t i, std::size_t j, double v) { return symmetric_weight(v, du[i], dp[j]); });
            tp.backward = tp.forward.transpose();
            break;
    }
    return tp;
}

std::vector<double> apply_forward(const TransitionPair& tp, std::span<const double> p, unsigned threads) {
    if (p.size() != tp.p_count()) {
        throw DimensionError("apply_forward: expected P vector of length " + std::to_string(tp.p_count()) +
                             ", got " + std::to_string(p.size()));
    }
    return tp.forward.multiply(p, threads);
}

std::vector<double> apply_backward(const TransitionPair& tp, std::span<const double> u, unsigned threads) {
    if (u.size() != tp.u_count()) {
        throw DimensionError("apply_backward: expected U vector of length " + std::to_string(tp.u_count()) +
                             ", got " + std::to_string(u.size()));
    }
    return tp.backward.multiply(u, threads);
}

}  // namespace birank
