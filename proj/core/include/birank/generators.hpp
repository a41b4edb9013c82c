#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <variant>
#include <vector>

#include "birank/graph.hpp"

namespace birank {

struct RandomKind {
    /// Probability of each potential edge, in (0, 1].
    double density = 0.01;
};

struct PowerLawKind {
    /// Exponent of p(d = x) ~ x^-lambda, > 1.
    double lambda = 2.0;
};

struct GenSpec {
    std::size_t u_count = 0;
    std::size_t p_count = 0;
    std::variant<RandomKind, PowerLawKind> kind = RandomKind{};
    std::uint64_t seed = 0;

    /// Throws ConfigError for density outside (0, 1] or lambda <= 1.
    void validate() const;
};

/**
 * Portable uniform source: std::mt19937_64 output mapped to the open
 * interval (0, 1) as ((x >> 11) + 0.5) * 2^-53. The standard distributions
 * are implementation-defined, so they are avoided to keep graphs identical
 * across platforms.
 */
class UniformSource {
public:
    explicit UniformSource(std::uint64_t seed);
    double next();
    /// Uniform integer in [0, bound).
    std::size_t below(std::size_t bound);

private:
    std::mt19937_64 engine_;
};

/// Every potential (u, p) pair is visited in row-major order and kept, with weight 1, iff a draw is <= density.
BipartiteGraph gen_random(const GenSpec& spec);

struct GenerationReport {
    std::vector<std::size_t> target_u_degrees;
    std::vector<std::size_t> target_p_degrees;
    /// Demand of U vertices that could not be matched to distinct P vertices with spare capacity.
    std::size_t truncated_u_demand = 0;
    /// Capacity of P vertices left unused once every U vertex was served.
    std::size_t unused_p_capacity = 0;
};

/**
 * Power-law bipartite graph.
 *
 * 1. Every vertex draws a target degree from p(x) ~ x^-lambda on
 *    [1, size of the other side].
 * 2. U vertices are visited by decreasing target degree (ties by index) and
 *    each picks its neighbours uniformly among P vertices that still have
 *    residual degree. Demand that cannot be met is dropped and recorded.
 *
 * All weights are 1.
 */
BipartiteGraph gen_powerlaw(const GenSpec& spec, GenerationReport* report = nullptr);

/// Dispatches on spec.kind.
BipartiteGraph generate(const GenSpec& spec, GenerationReport* report = nullptr);

}  // namespace birank
