#include "birank/sparse_matrix.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "birank/error.hpp"

namespace birank {

namespace {

// Below this many stored entries a product is not worth the thread startup.
constexpr std::size_t kMinParallelNnz = 1u << 16;

}  // namespace

CsrMatrix::CsrMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), row_ptr_(rows + 1, 0) {}

CsrMatrix CsrMatrix::from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets) {
    for (const auto& t : triplets) {
        if (t.row >= rows || t.col >= cols) {
            throw DimensionError("triplet (" + std::to_string(t.row) + ", " + std::to_string(t.col) +
                                 ") outside " + std::to_string(rows) + "x" + std::to_string(cols));
        }
    }
    // Stable so duplicates are summed in input order.
    std::stable_sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });

    CsrMatrix m(rows, cols);
    m.col_index_.reserve(triplets.size());
    m.values_.reserve(triplets.size());
    for (std::size_t k = 0; k < triplets.size(); ++k) {
        const auto& t = triplets[k];
        if (k > 0 && triplets[k - 1].row == t.row && triplets[k - 1].col == t.col) {
            m.values_.back() += t.value;
            continue;
        }
        m.col_index_.push_back(t.col);
        m.values_.push_back(t.value);
        ++m.row_ptr_[t.row + 1];
    }
    for (std::size_t r = 0; r < rows; ++r) {
        m.row_ptr_[r + 1] += m.row_ptr_[r];
    }
    return m;
}

std::span<const std::size_t> CsrMatrix::row_cols(std::size_t row) const {
    return std::span<const std::size_t>(col_index_).subspan(row_ptr_[row], row_ptr_[row + 1] - row_ptr_[row]);
}

std::span<const double> CsrMatrix::row_values(std::size_t row) const {
    return std::span<const double>(values_).subspan(row_ptr_[row], row_ptr_[row + 1] - row_ptr_[row]);
}

double CsrMatrix::at(std::size_t row, std::size_t col) const {
    if (row >= rows_ || col >= cols_) {
        throw DimensionError("index out of range");
    }
    const auto cols = row_cols(row);
    const auto it = std::lower_bound(cols.begin(), cols.end(), col);
    if (it == cols.end() || *it != col) {
        return 0.0;
    }
    return row_values(row)[static_cast<std::size_t>(it - cols.begin())];
}

CsrMatrix CsrMatrix::transpose() const {
    CsrMatrix t(cols_, rows_);
    t.col_index_.resize(nnz());
    t.values_.resize(nnz());
    for (std::size_t c : col_index_) {
        ++t.row_ptr_[c + 1];
    }
    for (std::size_t c = 0; c < cols_; ++c) {
        t.row_ptr_[c + 1] += t.row_ptr_[c];
    }
    // Walking rows in order keeps each transposed row sorted by column.
    std::vector<std::size_t> next(t.row_ptr_.begin(), t.row_ptr_.end() - 1);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
            const std::size_t dst = next[col_index_[k]]++;
            t.col_index_[dst] = r;
            t.values_[dst] = values_[k];
        }
    }
    return t;
}

std::vector<double> CsrMatrix::row_sums() const {
    std::vector<double> sums(rows_, 0.0);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
            sums[r] += values_[k];
        }
    }
    return sums;
}

std::vector<double> CsrMatrix::col_sums() const {
    std::vector<double> sums(cols_, 0.0);
    for (std::size_t k = 0; k < nnz(); ++k) {
        sums[col_index_[k]] += values_[k];
    }
    return sums;
}

void CsrMatrix::multiply_rows(std::span<const double> x, std::span<double> y, std::size_t begin,
                              std::size_t end) const {
    for (std::size_t r = begin; r < end; ++r) {
        double acc = 0.0;
        for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
            acc += values_[k] * x[col_index_[k]];
        }
        y[r] = acc;
    }
}

void CsrMatrix::multiply(std::span<const double> x, std::span<double> y, unsigned threads) const {
    if (x.size() != cols_ || y.size() != rows_) {
        throw DimensionError("matrix is " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                             ", got x of length " + std::to_string(x.size()) + " and y of length " +
                             std::to_string(y.size()));
    }
    if (threads <= 1 || nnz() < kMinParallelNnz || rows_ < threads) {
        multiply_rows(x, y, 0, rows_);
        return;
    }
    // Split by stored entries so each worker gets a similar amount of work.
    std::vector<std::size_t> bounds{0};
    const std::size_t per_chunk = nnz() / threads + 1;
    for (unsigned c = 1; c < threads; ++c) {
        const auto it = std::lower_bound(row_ptr_.begin(), row_ptr_.end(), per_chunk * c);
        bounds.push_back(std::max(bounds.back(), static_cast<std::size_t>(it - row_ptr_.begin())));
    }
    bounds.push_back(rows_);
    {
        std::vector<std::jthread> workers;
        for (std::size_t c = 1; c + 1 < bounds.size(); ++c) {
            workers.emplace_back([&, c] { multiply_rows(x, y, bounds[c], std::min(bounds[c + 1], rows_)); });
        }
        multiply_rows(x, y, 0, std::min(bounds[1], rows_));
    }
}

std::vector<double> CsrMatrix::multiply(std::span<const double> x, unsigned threads) const {
    std::vector<double> y(rows_);
    multiply(x, y, threads);
    return y;
}

}  // namespace birank
