#include "birank/npartite.hpp"

#include <cmath>
#include <map>
#include <string>

#include "birank/error.hpp"
#include "birank/normalize.hpp"

namespace birank {

namespace {

// Row sums may exceed 1 by rounding when built from decimal inputs.
constexpr double kRowSumSlack = 1e-12;

}  // namespace

NPartiteConfig NPartiteConfig::uniform(const NPartiteGraph& graph, double weight) {
    const std::size_t n = graph.partition_count();
    NPartiteConfig cfg;
    cfg.alphas.assign(n, std::vector<double>(n, 0.0));
    for (const auto& [t, l] : graph.relation_keys()) {
        cfg.alphas[t][l] = weight;
    }
    return cfg;
}

void NPartiteConfig::validate(std::size_t partitions) const {
    if (alphas.size() != partitions) {
        throw ConfigError("alphas must be a " + std::to_string(partitions) + "x" + std::to_string(partitions) +
                          " matrix");
    }
    for (std::size_t t = 0; t < partitions; ++t) {
        if (alphas[t].size() != partitions) {
            throw ConfigError("alphas row " + std::to_string(t) + " has the wrong length");
        }
        double row = 0.0;
        for (std::size_t l = 0; l < partitions; ++l) {
            const double a = alphas[t][l];
            if (!std::isfinite(a) || a < 0.0) {
                throw ConfigError("alphas entries must be finite and >= 0");
            }
            if (t == l && a != 0.0) {
                throw ConfigError("alphas diagonal must be 0");
            }
            row += a;
        }
        if (row > 1.0 + kRowSumSlack) {
            throw ConfigError("alphas row " + std::to_string(t) + " sums to " + std::to_string(row) + " > 1");
        }
    }
    if (!(tol > 0.0)) {
        throw ConfigError("tol must be > 0");
    }
    if (max_iters < 1) {
        throw ConfigError("max_iters must be >= 1");
    }
    if (init == Init::Given) {
        throw ConfigError("npartite_rank supports uniform or query initialization only");
    }
}

CsrMatrix normalized_relation(const NPartiteGraph& graph, std::size_t t, std::size_t l) {
    const auto dt = graph.relation_degrees(t, l);
    const auto dl = graph.relation_degrees(l, t);
    return graph.relation(t, l).map_values(
        [&](std::size_t i, std::size_t j, double w) { return symmetric_weight(w, dt[i], dl[j]); });
}

NPartiteResult npartite_rank(const NPartiteGraph& graph, std::span<const QueryVector> queries,
                             const NPartiteConfig& cfg) {
    const std::size_t n = graph.partition_count();
    cfg.validate(n);
    if (queries.size() != n) {
        throw DimensionError("expected " + std::to_string(n) + " query vectors, got " + std::to_string(queries.size()));
    }
    for (std::size_t t = 0; t < n; ++t) {
        queries[t].validate(graph.partition_sizes()[t]);
    }

    struct Term {
        std::size_t source;
        double alpha;
        CsrMatrix s;
    };
    std::vector<std::vector<Term>> terms(n);
    std::vector<double> prior_weight(n, 1.0);
    for (std::size_t t = 0; t < n; ++t) {
        double row = 0.0;
        for (std::size_t l = 0; l < n; ++l) {
            row += cfg.alphas[t][l];
            if (l != t && cfg.alphas[t][l] != 0.0 && graph.has_relation(t, l)) {
                terms[t].push_back({l, cfg.alphas[t][l], normalized_relation(graph, t, l)});
            }
        }
        prior_weight[t] = 1.0 - row;
    }

    NPartiteResult result;
    result.scores.resize(n);
    for (std::size_t t = 0; t < n; ++t) {
        result.scores[t] = cfg.init == Init::Query ? queries[t].scores
                                                   : QueryVector::uniform(t, graph.partition_sizes()[t]).scores;
    }

    std::vector<double> next;
    std::vector<double> product;
    for (int it = 1; it <= cfg.max_iters; ++it) {
        double diff = 0.0;
        for (std::size_t t = 0; t < n; ++t) {
            const std::size_t size = graph.partition_sizes()[t];
            next.assign(size, 0.0);
            for (const auto& term : terms[t]) {
                product.resize(size);
                term.s.multiply(result.scores[term.source], product, cfg.threads);
                for (std::size_t i = 0; i < size; ++i) {
                    next[i] += term.alpha * product[i];
                }
            }
            const auto& prior = queries[t].scores;
            double part = 0.0;
            for (std::size_t i = 0; i < size; ++i) {
                next[i] += prior_weight[t] * prior[i];
                if (!std::isfinite(next[i])) {
                    throw NumericError("non-finite score in partition " + std::to_string(t) + " at iteration " +
                                       std::to_string(it));
                }
                const double d = next[i] - result.scores[t][i];
                part += d * d;
            }
            diff += part;
            result.scores[t].swap(next);
        }
        result.iterations = it;
        result.diff_trace.push_back(diff);
        if (diff <= cfg.tol) {
            result.converged = true;
            break;
        }
    }
    return result;
}

double npartite_objective(const NPartiteGraph& graph, std::span<const std::vector<double>> scores,
                          std::span<const QueryVector> queries, const std::vector<std::vector<double>>& gammas,
                          std::span<const double> etas) {
    const std::size_t n = graph.partition_count();
    if (scores.size() != n || queries.size() != n || gammas.size() != n || etas.size() != n) {
        throw DimensionError("npartite_objective: expected one entry per partition");
    }
    double total = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
        const auto& s = scores[t];
        const auto& q = queries[t].scores;
        if (s.size() != graph.partition_sizes()[t] || q.size() != s.size() || gammas[t].size() != n) {
            throw DimensionError("npartite_objective: partition " + std::to_string(t) + " has the wrong size");
        }
        for (std::size_t i = 0; i < s.size(); ++i) {
            const double d = s[i] - q[i];
            total += etas[t] * d * d;
        }
    }
    for (const auto& [t, l] : graph.relation_keys()) {
        const double gamma = gammas[t][l];
        if (gamma == 0.0) {
            continue;
        }
        const auto& w = graph.relation(t, l);
        const auto dt = graph.relation_degrees(t, l);
        const auto dl = graph.relation_degrees(l, t);
        double smooth = 0.0;
        for (std::size_t i = 0; i < w.rows(); ++i) {
            const auto cols = w.row_cols(i);
            const auto vals = w.row_values(i);
            for (std::size_t k = 0; k < cols.size(); ++k) {
                const double d = scores[t][i] / std::sqrt(dt[i]) - scores[l][cols[k]] / std::sqrt(dl[cols[k]]);
                smooth += vals[k] * d * d;
            }
        }
        total += gamma * smooth;
    }
    return total;
}

}  // namespace birank
