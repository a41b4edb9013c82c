#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace birank {

struct Triplet {
    std::size_t row;
    std::size_t col;
    double value;
};

/**
 * Immutable compressed-sparse-row matrix of doubles.
 *
 * Entries within a row are sorted by column index and every row is reduced
 * sequentially in that order, so products are bit-reproducible regardless of
 * how many threads split the rows.
 */
class CsrMatrix {
public:
    CsrMatrix() = default;
    CsrMatrix(std::size_t rows, std::size_t cols);

    /// Builds from triplets. Duplicate (row, col) pairs are summed in input order.
    /// Caller is responsible for bounds; out-of-range entries throw DimensionError.
    static CsrMatrix from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t nnz() const noexcept { return values_.size(); }

    std::span<const std::size_t> row_ptr() const noexcept { return row_ptr_; }
    std::span<const std::size_t> col_index() const noexcept { return col_index_; }
    std::span<const double> values() const noexcept { return values_; }

    /// Column indices / values of a single row.
    std::span<const std::size_t> row_cols(std::size_t row) const;
    std::span<const double> row_values(std::size_t row) const;

    /// Stored value at (row, col), 0.0 when absent.
    double at(std::size_t row, std::size_t col) const;

    CsrMatrix transpose() const;

    /// Same sparsity pattern with every value replaced by f(row, col, value).
    template <typename F>
    CsrMatrix map_values(F&& f) const {
        CsrMatrix out = *this;
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
                out.values_[k] = f(r, col_index_[k], values_[k]);
            }
        }
        return out;
    }

    std::vector<double> row_sums() const;
    std::vector<double> col_sums() const;

    /// y = A x. `threads` > 1 splits rows across worker threads.
    void multiply(std::span<const double> x, std::span<double> y, unsigned threads = 1) const;
    std::vector<double> multiply(std::span<const double> x, unsigned threads = 1) const;

    friend bool operator==(const CsrMatrix&, const CsrMatrix&) = default;

private:
    void multiply_rows(std::span<const double> x, std::span<double> y, std::size_t begin,
                       std::size_t end) const;

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::size_t> row_ptr_{0};
    std::vector<std::size_t> col_index_;
    std::vector<double> values_;
};

}  // namespace birank
