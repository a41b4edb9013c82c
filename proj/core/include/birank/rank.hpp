#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "birank/graph.hpp"
#include "birank/normalize.hpp"

namespace birank {

/// Starting point of the iteration.
enum class Init {
    Uniform,  ///< 1/|side| everywhere
    Query,    ///< the query vectors themselves
    Given,    ///< RankConfig::initial_p / initial_u
};

struct RankConfig {
    static constexpr double kDefaultAlpha = 0.85;
    static constexpr double kDefaultBeta = 0.85;
    static constexpr double kDefaultTol = 1e-4;
    static constexpr int kDefaultMaxIters = 200;

    /// Weight of the propagated U scores in the P update.
    double alpha = kDefaultAlpha;
    /// Weight of the propagated P scores in the U update.
    double beta = kDefaultBeta;
    int max_iters = kDefaultMaxIters;
    /// Stop once the squared change of (p, u) over one iteration is <= tol.
    double tol = kDefaultTol;
    Init init = Init::Uniform;
    std::vector<double> initial_p;
    std::vector<double> initial_u;
    /// Evaluate the regularization objective after every iteration (costs one pass over W).
    bool record_objective = false;
    unsigned threads = 1;

    /// Throws ConfigError when a field is outside its domain.
    void validate() const;
};

struct RankResult {
    std::vector<double> p;
    std::vector<double> u;
    int iterations = 0;
    bool converged = false;
    /// Objective value after each iteration; empty unless requested and alpha, beta > 0.
    std::vector<double> objective_trace;
    /// Squared difference of (p, u) between consecutive iterations.
    std::vector<double> diff_trace;
    /// Wall time of each iteration.
    std::vector<double> iteration_seconds;
};

/**
 * Iterative ranking on a bipartite graph.
 *
 * Each iteration first sets p = alpha * backward * u + (1 - alpha) * p0 and
 * then u = beta * forward * p + (1 - beta) * u0. For Scheme::HITS both
 * vectors are additionally rescaled to unit L2 norm after every iteration,
 * since the raw weight matrix has no contraction.
 *
 * Throws NumericError if a non-finite score appears.
 */
RankResult rank(const TransitionPair& tp, const QueryVector& p0, const QueryVector& u0, const RankConfig& cfg = {});

struct StationarySolution {
    std::vector<double> p;
    std::vector<double> u;
};

/// Default cap on either side of the graph for dense computations.
inline constexpr std::size_t kDefaultDenseLimit = 2000;

/**
 * Fixed point of the iteration obtained by a dense linear solve:
 *   p* = (I - ab B F)^-1 [a(1-b) B u0 + (1-a) p0]
 *   u* = (I - ab F B)^-1 [b(1-a) F p0 + (1-b) u0]
 * with F = forward, B = backward. Intended as a reference on small graphs.
 *
 * Throws SizeLimitError above `dense_limit` vertices on either side and
 * NumericError when the system is singular.
 */
StationarySolution closed_form(const TransitionPair& tp, const QueryVector& p0, const QueryVector& u0, double alpha,
                               double beta, std::size_t dense_limit = kDefaultDenseLimit);

/**
 * Regularization objective
 *   sum_ij w_ij (p_j / sqrt(d_j) - u_i / sqrt(d_i))^2
 *     + gamma * |p - p0|^2 + eta * |u - u0|^2.
 * Edges never touch zero-degree vertices, so isolated vertices only enter
 * through the fitting terms.
 */
double objective(const BipartiteGraph& graph, std::span<const double> p, std::span<const double> u, double gamma,
                 double eta, std::span<const double> p0, std::span<const double> u0);

struct Regularization {
    double gamma;
    double eta;
};

/// gamma = (1 - alpha) / alpha, eta = (1 - beta) / beta. Both must be in (0, 1].
Regularization hyperparam_map(double alpha, double beta);

}  // namespace birank
