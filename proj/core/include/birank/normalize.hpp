#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "birank/graph.hpp"
#include "birank/sparse_matrix.hpp"

namespace birank {

/// How edge weights are scaled by vertex degrees before propagation.
enum class Scheme {
    HITS,    ///< S = W,                     S' = W^T
    CoHITS,  ///< S = W D_p^-1,              S' = W^T D_u^-1
    BGER,    ///< S = D_u^-1 W,              S' = D_p^-1 W^T
    BGRM,    ///< S = D_u^-1 W D_p^-1,       S' = D_p^-1 W^T D_u^-1
    BiRank,  ///< S = D_u^-1/2 W D_p^-1/2,   S' = S^T
};

std::string_view to_string(Scheme scheme);
/// Parses the lower-case CLI spelling (hits, cohits, bger, bgrm, birank).
std::optional<Scheme> parse_scheme(std::string_view name);

/**
 * The two propagation matrices of one scheme.
 *
 * `forward` (|U| x |P|) updates U scores from P scores, `backward` (|P| x |U|)
 * updates P scores from U scores. The source graph is kept (shared, not
 * copied) for diagnostics that need raw weights.
 */
struct TransitionPair {
    Scheme scheme = Scheme::BiRank;
    CsrMatrix forward;
    CsrMatrix backward;
    BipartiteGraph graph;

    std::size_t u_count() const noexcept { return forward.rows(); }
    std::size_t p_count() const noexcept { return forward.cols(); }
};

TransitionPair normalize(const BipartiteGraph& graph, Scheme scheme);

/// u = forward * p
std::vector<double> apply_forward(const TransitionPair& tp, std::span<const double> p, unsigned threads = 1);
/// p = backward * u
std::vector<double> apply_backward(const TransitionPair& tp, std::span<const double> u, unsigned threads = 1);

/// Symmetric normalization of one weight: w / sqrt(d_row * d_col).
inline double symmetric_weight(double w, double d_row, double d_col) {
    return w / std::sqrt(d_row * d_col);
}

}  // namespace birank
