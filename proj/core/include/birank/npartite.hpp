#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "birank/graph.hpp"
#include "birank/rank.hpp"

namespace birank {

struct NPartiteConfig {
    /// alphas[t][l]: weight of partition l's propagated scores in the update of partition t.
    /// Diagonal entries must be 0 and every row must sum to at most 1.
    std::vector<std::vector<double>> alphas;
    int max_iters = RankConfig::kDefaultMaxIters;
    double tol = RankConfig::kDefaultTol;
    /// Init::Given is not supported here.
    Init init = Init::Uniform;
    unsigned threads = 1;

    /// alphas[t][l] = `weight` for every t != l that share a relation in `graph`, 0 elsewhere.
    static NPartiteConfig uniform(const NPartiteGraph& graph, double weight);

    void validate(std::size_t partitions) const;
};

struct NPartiteResult {
    /// One score vector per partition.
    std::vector<std::vector<double>> scores;
    int iterations = 0;
    bool converged = false;
    std::vector<double> diff_trace;
};

/**
 * Ranks all partitions of an n-partite graph. Each round updates partition
 * t = 0, 1, ... in order as
 *   p_t = sum_{l != t} alpha_tl S_tl p_l + (1 - sum_{l != t} alpha_tl) p_t0
 * with S_tl = (D^t)^-1/2 W_tl (D^l)^-1/2, degrees taken within the relation,
 * and always using the most recent p_l. With two partitions (P first, U
 * second) this reproduces rank() on the birank scheme.
 */
NPartiteResult npartite_rank(const NPartiteGraph& graph, std::span<const QueryVector> queries,
                             const NPartiteConfig& cfg);

/// Symmetrically normalized relation matrix S_tl.
CsrMatrix normalized_relation(const NPartiteGraph& graph, std::size_t t, std::size_t l);

/**
 * Diagnostic n-partite objective
 *   sum_t eta_t |p_t - p_t0|^2
 *     + sum_{t != l} gamma_tl sum_ij (W_tl)_ij (p_t,i / sqrt(D^t_ii) - p_l,j / sqrt(D^l_jj))^2.
 */
double npartite_objective(const NPartiteGraph& graph, std::span<const std::vector<double>> scores,
                          std::span<const QueryVector> queries, const std::vector<std::vector<double>>& gammas,
                          std::span<const double> etas);

}  // namespace birank
