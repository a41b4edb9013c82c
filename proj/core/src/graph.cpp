#include "birank/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "birank/error.hpp"

namespace birank {

namespace {

void check_weight(double w, const std::string& where) {
    if (!std::isfinite(w) || w <= 0.0) {
        throw GraphError(where + ": weight must be finite and > 0, got " + std::to_string(w));
    }
}

std::string pair_name(std::size_t a, std::size_t b) {
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace

BipartiteGraph::BipartiteGraph() : BipartiteGraph(from_weight_matrix(CsrMatrix(0, 0))) {}

std::vector<Edge> BipartiteGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    const auto& w = weights();
    for (std::size_t i = 0; i < w.rows(); ++i) {
        const auto cols = w.row_cols(i);
        const auto vals = w.row_values(i);
        for (std::size_t k = 0; k < cols.size(); ++k) {
            out.push_back({i, cols[k], vals[k]});
        }
    }
    return out;
}

BipartiteGraph build_bipartite(std::size_t u_count, std::size_t p_count, std::span<const Edge> edges) {
    std::vector<Triplet> triplets;
    triplets.reserve(edges.size());
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const auto& e = edges[k];
        if (e.u >= u_count || e.p >= p_count) {
            throw GraphError("edge " + std::to_string(k) + " " + pair_name(e.u, e.p) + " outside " +
                             std::to_string(u_count) + "x" + std::to_string(p_count) + " graph");
        }
        check_weight(e.weight, "edge " + std::to_string(k));
        triplets.push_back({e.u, e.p, e.weight});
    }
    return from_weight_matrix(CsrMatrix::from_triplets(u_count, p_count, std::move(triplets)));
}

BipartiteGraph from_weight_matrix(CsrMatrix w) {
    for (double v : w.values()) {
        check_weight(v, "weight matrix");
    }
    auto data = std::make_shared<BipartiteGraph::Data>();
    data->weights_t = w.transpose();
    data->u_degrees = w.row_sums();
    data->p_degrees = data->weights_t.row_sums();
    data->weights = std::move(w);
    return BipartiteGraph(std::move(data));
}

void QueryVector::validate(std::size_t expected_size) const {
    if (scores.size() != expected_size) {
        throw DimensionError("query vector for partition " + std::to_string(side) + " has length " +
                             std::to_string(scores.size()) + ", expected " + std::to_string(expected_size));
    }
    for (std::size_t i = 0; i < scores.size(); ++i) {
        if (!std::isfinite(scores[i]) || scores[i] < 0.0) {
            throw ConfigError("query vector entry " + std::to_string(i) + " must be finite and >= 0");
        }
    }
}

QueryVector QueryVector::uniform(std::size_t side, std::size_t size) {
    return {side, std::vector<double>(size, size == 0 ? 0.0 : 1.0 / static_cast<double>(size))};
}

QueryVector QueryVector::zeros(std::size_t side, std::size_t size) {
    return {side, std::vector<double>(size, 0.0)};
}

const CsrMatrix& NPartiteGraph::relation(std::size_t t, std::size_t l) const {
    const auto it = relations_.find({t, l});
    if (it == relations_.end()) {
        throw GraphError("no relation " + pair_name(t, l));
    }
    return it->second.weights;
}

std::span<const double> NPartiteGraph::relation_degrees(std::size_t t, std::size_t l) const {
    const auto it = relations_.find({t, l});
    if (it == relations_.end()) {
        throw GraphError("no relation " + pair_name(t, l));
    }
    return it->second.degrees;
}

std::vector<std::size_t> NPartiteGraph::neighbours(std::size_t t) const {
    std::vector<std::size_t> out;
    for (const auto& [key, rel] : relations_) {
        if (key.first == t) {
            out.push_back(key.second);
        }
    }
    return out;
}

std::vector<PartitionPair> NPartiteGraph::relation_keys() const {
    std::vector<PartitionPair> out;
    for (const auto& [key, rel] : relations_) {
        out.push_back(key);
    }
    return out;
}

NPartiteGraph build_npartite(std::vector<std::size_t> partition_sizes,
                             const std::map<PartitionPair, std::vector<RelationEdge>>& relation_edges) {
    NPartiteGraph g;
    g.sizes_ = std::move(partition_sizes);
    const std::size_t n = g.sizes_.size();

    for (const auto& [key, edges] : relation_edges) {
        const auto [t, l] = key;
        if (t >= n || l >= n) {
            throw GraphError("relation " + pair_name(t, l) + " references a partition >= " + std::to_string(n));
        }
        if (t == l) {
            throw GraphError("relation " + pair_name(t, l) + " connects a partition to itself");
        }
        std::vector<Triplet> triplets;
        triplets.reserve(edges.size());
        for (std::size_t k = 0; k < edges.size(); ++k) {
            const auto& e = edges[k];
            if (e.from >= g.sizes_[t] || e.to >= g.sizes_[l]) {
                throw GraphError("relation " + pair_name(t, l) + " edge " + std::to_string(k) + " " +
                                 pair_name(e.from, e.to) + " out of range");
            }
            check_weight(e.weight, "relation " + pair_name(t, l) + " edge " + std::to_string(k));
            triplets.push_back({e.from, e.to, e.weight});
        }
        auto w = CsrMatrix::from_triplets(g.sizes_[t], g.sizes_[l], std::move(triplets));

        if (const auto reverse = g.relations_.find({l, t}); reverse != g.relations_.end()) {
            if (!(reverse->second.weights.transpose() == w)) {
                throw GraphError("relations " + pair_name(t, l) + " and " + pair_name(l, t) +
                                 " are not transposes of each other");
            }
            continue;
        }
        auto wt = w.transpose();
        auto wt_degrees = wt.row_sums();
        auto w_degrees = w.row_sums();
        g.relations_[{t, l}] = {std::move(w), std::move(w_degrees)};
        g.relations_[{l, t}] = {std::move(wt), std::move(wt_degrees)};
    }
    return g;
}

}  // namespace birank
