#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "birank/error.hpp"
#include "birank/sparse_matrix.hpp"
#include "support/dense_oracle.hpp"

namespace birank {
namespace {

TEST(CsrMatrix, SumsDuplicatesAndSortsColumns) {
    const auto m = CsrMatrix::from_triplets(2, 3, {{1, 2, 1.0}, {0, 1, 2.0}, {1, 0, 3.0}, {0, 1, 0.5}});
    EXPECT_EQ(m.nnz(), 3u);
    EXPECT_DOUBLE_EQ(m.at(0, 1), 2.5);
    EXPECT_DOUBLE_EQ(m.at(1, 0), 3.0);
    EXPECT_DOUBLE_EQ(m.at(1, 2), 1.0);
    EXPECT_DOUBLE_EQ(m.at(0, 0), 0.0);
    const auto cols = m.row_cols(1);
    ASSERT_EQ(cols.size(), 2u);
    EXPECT_LT(cols[0], cols[1]);
}

TEST(CsrMatrix, RejectsOutOfRangeTriplets) {
    EXPECT_THROW(CsrMatrix::from_triplets(2, 2, {{2, 0, 1.0}}), DimensionError);
    EXPECT_THROW(CsrMatrix::from_triplets(2, 2, {{0, 5, 1.0}}), DimensionError);
}

TEST(CsrMatrix, MultiplyRejectsDimensionMismatch) {
    const auto m = CsrMatrix::from_triplets(2, 3, {{0, 0, 1.0}});
    const std::vector<double> x(2, 1.0);
    EXPECT_THROW(m.multiply(x), DimensionError);
}

TEST(CsrMatrix, TransposeAndProductsMatchDenseOracle) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t rows = 1 + rng() % 30;
        const std::size_t cols = 1 + rng() % 30;
        std::vector<Triplet> t;
        for (const auto& e : oracle::random_edges(rng, rows, cols, 0.3)) {
            t.push_back({e.u, e.p, e.weight});
        }
        const auto m = CsrMatrix::from_triplets(rows, cols, t);
        const auto dm = oracle::dense(m);
        EXPECT_EQ(oracle::dense(m.transpose()), oracle::transpose(dm));

        const auto x = oracle::random_vector(rng, cols);
        const auto y = m.multiply(x);
        const auto expected = oracle::multiply(dm, x);
        for (std::size_t i = 0; i < rows; ++i) {
            EXPECT_NEAR(y[i], expected[i], 1e-12);
        }
    }
}

TEST(CsrMatrix, ThreadedProductIsBitIdentical) {
    std::mt19937_64 rng(11);
    std::vector<Triplet> t;
    for (const auto& e : oracle::random_edges(rng, 600, 500, 0.4)) {
        t.push_back({e.u, e.p, e.weight});
    }
    const auto m = CsrMatrix::from_triplets(600, 500, t);
    ASSERT_GT(m.nnz(), 1u << 16);
    const auto x = oracle::random_vector(rng, 500);
    const auto serial = m.multiply(x, 1);
    for (unsigned threads : {2u, 3u, 8u}) {
        EXPECT_EQ(m.multiply(x, threads), serial) << threads << " threads";
    }
}

TEST(CsrMatrix, RowAndColumnSums) {
    const auto m = CsrMatrix::from_triplets(2, 2, {{0, 0, 1.0}, {0, 1, 2.0}, {1, 1, 4.0}});
    EXPECT_EQ(m.row_sums(), (std::vector<double>{3.0, 4.0}));
    EXPECT_EQ(m.col_sums(), (std::vector<double>{1.0, 6.0}));
}

}  // namespace
}  // namespace birank
