#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "birank/error.hpp"
#include "birank/spectral.hpp"
#include "support/dense_oracle.hpp"

namespace birank {
namespace {

oracle::Vector dense_sts_eigenvalues(const BipartiteGraph& g) {
    const auto d = oracle::dense_transition(oracle::dense_weights(g), Scheme::BiRank);
    return oracle::symmetric_eigenvalues(oracle::multiply(oracle::transpose(d.forward), d.forward));
}

TEST(EigenBound, FullPropagationOnConnectedGraphIsOne) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 10; ++trial) {
        const auto g = oracle::random_connected_graph(rng, 2 + rng() % 20, 2 + rng() % 20, 0.2);
        const auto b = eigen_bound_check(normalize(g, Scheme::BiRank), 1.0, 1.0);
        EXPECT_NEAR(b.lambda_max_abs, 1.0, 1e-9);
        EXPECT_TRUE(b.within_bound);
    }
}

TEST(EigenBound, ZeroAlphaGivesZero) {
    std::mt19937_64 rng(22);
    const auto g = oracle::random_connected_graph(rng, 5, 7, 0.3);
    const auto b = eigen_bound_check(normalize(g, Scheme::BiRank), 0.0, 0.85);
    EXPECT_EQ(b.lambda_max_abs, 0.0);
    EXPECT_TRUE(b.within_bound);
}

TEST(EigenBound, RandomTenByTenMatchesOracle) {
    std::mt19937_64 rng(23);
    const auto g = build_bipartite(10, 10, oracle::random_edges(rng, 10, 10, 0.3));
    const auto b = eigen_bound_check(normalize(g, Scheme::BiRank), 0.85, 0.85);
    const auto ev = dense_sts_eigenvalues(g);
    EXPECT_NEAR(b.lambda_max_abs, 0.85 * 0.85 * std::abs(ev[0]), 1e-10);
    EXPECT_TRUE(b.within_bound);
}

TEST(EigenBound, RejectsOtherSchemesAndLargeGraphs) {
    std::mt19937_64 rng(24);
    const auto g = oracle::random_connected_graph(rng, 5, 4, 0.3);
    EXPECT_THROW(eigen_bound_check(normalize(g, Scheme::HITS), 0.5, 0.5), ConfigError);
    EXPECT_THROW(eigen_bound_check(normalize(g, Scheme::BiRank), 0.5, 0.5, 3), SizeLimitError);
}

TEST(SecondEigenvalue, CompleteEqualWeightGraphIsRankOne) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            edges.push_back({i, j, 2.0});
        }
    }
    const auto tp = normalize(build_bipartite(6, 4, edges), Scheme::BiRank);
    const auto e = second_eigenvalue_estimate(tp);
    EXPECT_NEAR(e.value, 0.0, 1e-12);
    EXPECT_TRUE(e.reliable);
}

TEST(SecondEigenvalue, SingleVertexHasNone) {
    const std::vector<Edge> edges{{0, 0, 1.0}};
    const auto e = second_eigenvalue_estimate(normalize(build_bipartite(1, 1, edges), Scheme::BiRank));
    EXPECT_EQ(e.value, 0.0);
}

TEST(SecondEigenvalue, DenseAndPowerMatchOracle) {
    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 10; ++trial) {
        const auto g = oracle::random_connected_graph(rng, 10, 10, 0.3);
        const auto tp = normalize(g, Scheme::BiRank);
        const auto ev = dense_sts_eigenvalues(g);
        const double want = std::abs(ev[1]);
        EigenEstimateOptions opts;
        opts.method = EigenMethod::Dense;
        const auto dense = second_eigenvalue_estimate(tp, opts);
        EXPECT_EQ(dense.method, EigenMethod::Dense);
        EXPECT_NEAR(dense.value, want, 1e-6);
        opts.method = EigenMethod::Power;
        const auto power = second_eigenvalue_estimate(tp, opts);
        EXPECT_EQ(power.method, EigenMethod::Power);
        if (power.reliable) {
            EXPECT_NEAR(power.value, want, 1e-6);
        }
    }
}

TEST(SecondEigenvalue, AutoSwitchesToPowerAboveLimit) {
    std::mt19937_64 rng(26);
    const auto tp = normalize(oracle::random_connected_graph(rng, 12, 15, 0.3), Scheme::BiRank);
    EigenEstimateOptions opts;
    opts.dense_limit = 10;
    EXPECT_EQ(second_eigenvalue_estimate(tp, opts).method, EigenMethod::Power);
    opts.dense_limit = 20;
    EXPECT_EQ(second_eigenvalue_estimate(tp, opts).method, EigenMethod::Dense);
}

TEST(SecondEigenvalue, ExhaustedBudgetIsFlagged) {
    std::mt19937_64 rng(27);
    const auto tp = normalize(oracle::random_connected_graph(rng, 20, 20, 0.2), Scheme::BiRank);
    EigenEstimateOptions opts;
    opts.method = EigenMethod::Power;
    opts.max_iters = 1;
    opts.tol = 1e-15;
    EXPECT_FALSE(second_eigenvalue_estimate(tp, opts).reliable);
}

TEST(SpectralProperty, BoundHoldsOnRandomGraphs) {
    std::mt19937_64 rng(28);
    std::uniform_real_distribution<double> weight(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t nu = 1 + rng() % 30;
        const std::size_t np = 1 + rng() % 30;
        const auto tp = normalize(build_bipartite(nu, np, oracle::random_edges(rng, nu, np, 0.2)), Scheme::BiRank);
        const double a = weight(rng);
        const double b = weight(rng);
        EXPECT_TRUE(eigen_bound_check(tp, a, b).within_bound) << "trial " << trial;
    }
}

}  // namespace
}  // namespace birank
