#pragma once

#include <cstddef>

#include "birank/normalize.hpp"
#include "birank/rank.hpp"

namespace birank {

struct EigenBound {
    double lambda_max_abs = 0.0;
    bool within_bound = false;
};

/// Largest |eigenvalue| of alpha * beta * S^T S, checked against alpha * beta (+1e-9).
/// Requires Scheme::BiRank. Throws SizeLimitError above `dense_limit` per side.
EigenBound eigen_bound_check(const TransitionPair& tp, double alpha, double beta,
                             std::size_t dense_limit = kDefaultDenseLimit);

enum class EigenMethod { Auto, Dense, Power };

struct EigenEstimateOptions {
    EigenMethod method = EigenMethod::Auto;
    /// Auto uses the dense solver when both sides are at most this size.
    std::size_t dense_limit = 500;
    int max_iters = 20000;
    /// Relative residual |A x - lambda x| / |x| accepted as converged.
    double tol = 1e-10;
};

struct EigenEstimate {
    double value = 0.0;
    /// False when power iteration ran out of budget.
    bool reliable = true;
    EigenMethod method = EigenMethod::Dense;
    int iterations = 0;
};

/**
 * |lambda_2| of S^T S, the quantity that governs how fast the non-dominant
 * components die out during iteration. A graph with a single P vertex has no
 * second eigenvalue and yields 0.
 */
EigenEstimate second_eigenvalue_estimate(const TransitionPair& tp, const EigenEstimateOptions& opts = {});

}  // namespace birank
