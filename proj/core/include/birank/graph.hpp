#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "birank/sparse_matrix.hpp"

namespace birank {

/// Partition indices of a bipartite graph.
inline constexpr std::size_t kUSide = 0;
inline constexpr std::size_t kPSide = 1;

/// A vertex addressed by partition (0-based) and its position inside that partition.
struct VertexId {
    std::size_t side = 0;
    std::size_t index = 0;

    friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

struct Edge {
    std::size_t u;
    std::size_t p;
    double weight;
};

/**
 * Undirected weighted bipartite graph between a U side and a P side.
 *
 * The weight matrix W (|U| x |P|) holds strictly positive weights only; a
 * missing entry means the pair is not connected. Weighted degrees are cached
 * at construction. The object is immutable and copies share storage.
 */
class BipartiteGraph {
public:
    BipartiteGraph();

    std::size_t u_count() const noexcept { return data_->weights.rows(); }
    std::size_t p_count() const noexcept { return data_->weights.cols(); }
    std::size_t edge_count() const noexcept { return data_->weights.nnz(); }

    /// W, rows indexed by U and sorted by P index.
    const CsrMatrix& weights() const noexcept { return data_->weights; }
    /// W transposed, rows indexed by P.
    const CsrMatrix& weights_transposed() const noexcept { return data_->weights_t; }

    std::span<const double> u_degrees() const noexcept { return data_->u_degrees; }
    std::span<const double> p_degrees() const noexcept { return data_->p_degrees; }

    /// All stored edges in (u, p) order.
    std::vector<Edge> edges() const;

    friend BipartiteGraph build_bipartite(std::size_t u_count, std::size_t p_count, std::span<const Edge> edges);
    friend BipartiteGraph from_weight_matrix(CsrMatrix w);

private:
    struct Data {
        CsrMatrix weights;
        CsrMatrix weights_t;
        std::vector<double> u_degrees;
        std::vector<double> p_degrees;
    };

    explicit BipartiteGraph(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

    std::shared_ptr<const Data> data_;
};

/// Validates and assembles a bipartite graph. Duplicate (u, p) pairs are summed.
/// Throws GraphError for out-of-range indices and for weights that are not finite and > 0.
BipartiteGraph build_bipartite(std::size_t u_count, std::size_t p_count, std::span<const Edge> edges);

/// Wraps an existing weight matrix after the same validation as build_bipartite.
BipartiteGraph from_weight_matrix(CsrMatrix w);

/// Dense prior scores over one partition.
struct QueryVector {
    std::size_t side = 0;
    std::vector<double> scores;

    /// Throws DimensionError on length mismatch, ConfigError on negative or non-finite entries.
    void validate(std::size_t expected_size) const;

    static QueryVector uniform(std::size_t side, std::size_t size);
    static QueryVector zeros(std::size_t side, std::size_t size);
};

using PartitionPair = std::pair<std::size_t, std::size_t>;

struct RelationEdge {
    std::size_t from;
    std::size_t to;
    double weight;
};

/**
 * Undirected n-partite graph: n vertex partitions and, for each connected
 * pair (t, l), a |P_t| x |P_l| weight matrix. Both directions of every
 * relation are always present, with W_lt == transpose(W_tl).
 */
class NPartiteGraph {
public:
    std::size_t partition_count() const noexcept { return sizes_.size(); }
    std::span<const std::size_t> partition_sizes() const noexcept { return sizes_; }

    bool has_relation(std::size_t t, std::size_t l) const { return relations_.contains({t, l}); }
    /// Throws GraphError when the relation is absent.
    const CsrMatrix& relation(std::size_t t, std::size_t l) const;
    /// Weighted degree of every P_t vertex within relation (t, l) only.
    std::span<const double> relation_degrees(std::size_t t, std::size_t l) const;

    /// Partitions l with a stored relation (t, l), ascending.
    std::vector<std::size_t> neighbours(std::size_t t) const;
    std::vector<PartitionPair> relation_keys() const;

    friend NPartiteGraph build_npartite(std::vector<std::size_t> partition_sizes,
                                        const std::map<PartitionPair, std::vector<RelationEdge>>& relation_edges);

private:
    struct Relation {
        CsrMatrix weights;
        std::vector<double> degrees;
    };

    std::vector<std::size_t> sizes_;
    std::map<PartitionPair, Relation> relations_;
};

/// Builds an n-partite graph. A relation given in one direction only is mirrored;
/// relations supplied in both directions must be exact transposes of each other.
NPartiteGraph build_npartite(std::vector<std::size_t> partition_sizes,
                             const std::map<PartitionPair, std::vector<RelationEdge>>& relation_edges);

}  // namespace birank
