#include "birank/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "birank/error.hpp"

namespace birank {

void GenSpec::validate() const {
    if (const auto* r = std::get_if<RandomKind>(&kind)) {
        if (!(r->density > 0.0 && r->density <= 1.0)) {
            throw ConfigError("density must be in (0, 1], got " + std::to_string(r->density));
        }
    }
    if (const auto* pl = std::get_if<PowerLawKind>(&kind)) {
        if (!(pl->lambda > 1.0) || !std::isfinite(pl->lambda)) {
            throw ConfigError("lambda must be > 1, got " + std::to_string(pl->lambda));
        }
    }
}

UniformSource::UniformSource(std::uint64_t seed) : engine_(seed) {}

double UniformSource::next() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

std::size_t UniformSource::below(std::size_t bound) {
    const std::uint64_t b = bound;
    const std::uint64_t threshold = (0 - b) % b;
    while (true) {
        const std::uint64_t r = engine_();
        if (r >= threshold) {
            return static_cast<std::size_t>(r % b);
        }
    }
}

BipartiteGraph gen_random(const GenSpec& spec) {
    spec.validate();
    const double density = std::get<RandomKind>(spec.kind).density;
    UniformSource rng(spec.seed);

    std::vector<Triplet> triplets;
    triplets.reserve(static_cast<std::size_t>(density * static_cast<double>(spec.u_count) *
                                              static_cast<double>(spec.p_count) * 1.1) + 16);
    for (std::size_t i = 0; i < spec.u_count; ++i) {
        for (std::size_t j = 0; j < spec.p_count; ++j) {
            if (rng.next() <= density) {
                triplets.push_back({i, j, 1.0});
            }
        }
    }
    return from_weight_matrix(CsrMatrix::from_triplets(spec.u_count, spec.p_count, std::move(triplets)));
}

namespace {

/// Inverse-CDF sampler for p(x) ~ x^-lambda on [1, max_degree].
class PowerLawDegrees {
public:
    PowerLawDegrees(double lambda, std::size_t max_degree) : cdf_(max_degree) {
        double total = 0.0;
        for (std::size_t x = 1; x <= max_degree; ++x) {
            total += std::pow(static_cast<double>(x), -lambda);
            cdf_[x - 1] = total;
        }
        for (double& c : cdf_) {
            c /= total;
        }
    }

    std::size_t draw(UniformSource& rng) const {
        const double r = rng.next();
        const auto it = std::lower_bound(cdf_.begin(), cdf_.end(), r);
        const auto idx = static_cast<std::size_t>(it - cdf_.begin());
        return std::min(idx, cdf_.size() - 1) + 1;
    }

private:
    std::vector<double> cdf_;
};

}  // namespace

BipartiteGraph gen_powerlaw(const GenSpec& spec, GenerationReport* report) {
    spec.validate();
    const double lambda = std::get<PowerLawKind>(spec.kind).lambda;
    UniformSource rng(spec.seed);

    GenerationReport local;
    GenerationReport& rep = report != nullptr ? *report : local;
    rep = GenerationReport{};
    if (spec.u_count == 0 || spec.p_count == 0) {
        rep.target_u_degrees.assign(spec.u_count, 0);
        rep.target_p_degrees.assign(spec.p_count, 0);
        return from_weight_matrix(CsrMatrix(spec.u_count, spec.p_count));
    }

    const PowerLawDegrees u_dist(lambda, spec.p_count);
    const PowerLawDegrees p_dist(lambda, spec.u_count);
    rep.target_u_degrees.resize(spec.u_count);
    rep.target_p_degrees.resize(spec.p_count);
    for (auto& d : rep.target_u_degrees) {
        d = u_dist.draw(rng);
    }
    for (auto& d : rep.target_p_degrees) {
        d = p_dist.draw(rng);
    }

    std::vector<std::size_t> order(spec.u_count);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return rep.target_u_degrees[a] > rep.target_u_degrees[b];
    });

    // P vertices with residual capacity live in `open`; a partial Fisher-Yates
    // shuffle of its prefix picks distinct neighbours.
    std::vector<std::size_t> residual = rep.target_p_degrees;
    std::vector<std::size_t> open(spec.p_count);
    std::iota(open.begin(), open.end(), std::size_t{0});

    std::vector<Triplet> triplets;
    for (std::size_t u : order) {
        const std::size_t want = rep.target_u_degrees[u];
        const std::size_t take = std::min(want, open.size());
        rep.truncated_u_demand += want - take;
        for (std::size_t k = 0; k < take; ++k) {
            const std::size_t r = k + rng.below(open.size() - k);
            std::swap(open[k], open[r]);
            triplets.push_back({u, open[k], 1.0});
            --residual[open[k]];
        }
        // Drop exhausted vertices from the chosen prefix, back to front.
        for (std::size_t k = take; k-- > 0;) {
            if (residual[open[k]] == 0) {
                open[k] = open.back();
                open.pop_back();
            }
        }
    }
    for (std::size_t j : open) {
        rep.unused_p_capacity += residual[j];
    }
    return from_weight_matrix(CsrMatrix::from_triplets(spec.u_count, spec.p_count, std::move(triplets)));
}

BipartiteGraph generate(const GenSpec& spec, GenerationReport* report) {
    if (std::holds_alternative<RandomKind>(spec.kind)) {
        return gen_random(spec);
    }
    return gen_powerlaw(spec, report);
}

}  // namespace birank
