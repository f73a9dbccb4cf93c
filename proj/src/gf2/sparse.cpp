#include "annularkh/gf2.hpp"

#include <algorithm>
#include <stdexcept>

namespace annularkh::gf2 {

SparseMatrixF2::SparseMatrixF2(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), col_ptr_(cols + 1, 0) {}

SparseMatrixF2::SparseMatrixF2(std::size_t rows, std::size_t cols, std::vector<std::size_t> col_ptr,
                               std::vector<std::uint32_t> row_idx)
    : rows_(rows), cols_(cols), col_ptr_(std::move(col_ptr)), row_idx_(std::move(row_idx)) {
    if (col_ptr_.size() != cols_ + 1 || col_ptr_.front() != 0 || col_ptr_.back() != row_idx_.size())
        throw std::invalid_argument("SparseMatrixF2: malformed column pointers");
    for (std::size_t c = 0; c < cols_; ++c) {
        if (col_ptr_[c] > col_ptr_[c + 1]) throw std::invalid_argument("SparseMatrixF2: column pointers decrease");
        for (std::size_t p = col_ptr_[c]; p < col_ptr_[c + 1]; ++p) {
            if (row_idx_[p] >= rows_) throw std::invalid_argument("SparseMatrixF2: row index out of range");
            if (p > col_ptr_[c] && row_idx_[p - 1] >= row_idx_[p])
                throw std::invalid_argument("SparseMatrixF2: rows within a column must increase");
        }
    }
}

SparseMatrixF2 SparseMatrixF2::from_entries(std::size_t rows, std::size_t cols,
                                            std::vector<std::pair<std::uint32_t, std::uint32_t>> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.second != b.second ? a.second < b.second : a.first < b.first; });
    std::vector<std::size_t> ptr(cols + 1, 0);
    std::vector<std::uint32_t> idx;
    idx.reserve(entries.size());
    std::size_t p = 0;
    while (p < entries.size()) {
        std::size_t q = p;
        while (q < entries.size() && entries[q] == entries[p]) ++q;
        if ((q - p) % 2 == 1) {
            if (entries[p].second >= cols) throw std::invalid_argument("SparseMatrixF2: column index out of range");
            idx.push_back(entries[p].first);
            ++ptr[entries[p].second + 1];
        }
        p = q;
    }
    for (std::size_t c = 0; c < cols; ++c) ptr[c + 1] += ptr[c];
    return SparseMatrixF2(rows, cols, std::move(ptr), std::move(idx));
}

SparseMatrixF2 SparseMatrixF2::from_columns(std::size_t rows, const std::vector<std::vector<std::uint32_t>>& columns) {
    std::vector<std::size_t> ptr(columns.size() + 1, 0);
    std::vector<std::uint32_t> idx;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        std::vector<std::uint32_t> col = columns[c];
        std::sort(col.begin(), col.end());
        std::size_t p = 0;
        while (p < col.size()) {
            std::size_t q = p;
            while (q < col.size() && col[q] == col[p]) ++q;
            if ((q - p) % 2 == 1) idx.push_back(col[p]);
            p = q;
        }
        ptr[c + 1] = idx.size();
    }
    return SparseMatrixF2(rows, columns.size(), std::move(ptr), std::move(idx));
}

SparseMatrixF2 SparseMatrixF2::from_dense(const MatrixF2& m) {
    std::vector<std::size_t> ptr(m.cols() + 1, 0);
    std::vector<std::uint32_t> idx;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (m.get(r, c)) idx.push_back(static_cast<std::uint32_t>(r));
        ptr[c + 1] = idx.size();
    }
    return SparseMatrixF2(m.rows(), m.cols(), std::move(ptr), std::move(idx));
}

bool SparseMatrixF2::get(std::size_t r, std::size_t c) const {
    auto col = column(c);
    return std::binary_search(col.begin(), col.end(), static_cast<std::uint32_t>(r));
}

MatrixF2 SparseMatrixF2::to_dense() const {
    MatrixF2 m(rows_, cols_);
    for (std::size_t c = 0; c < cols_; ++c)
        for (std::uint32_t r : column(c)) m.set(r, c);
    return m;
}

SparseMatrixF2 SparseMatrixF2::transpose() const {
    std::vector<std::size_t> ptr(rows_ + 1, 0);
    for (std::uint32_t r : row_idx_) ++ptr[r + 1];
    for (std::size_t r = 0; r < rows_; ++r) ptr[r + 1] += ptr[r];
    std::vector<std::uint32_t> idx(row_idx_.size());
    std::vector<std::size_t> fill(ptr.begin(), ptr.end() - 1);
    for (std::size_t c = 0; c < cols_; ++c)
        for (std::uint32_t r : column(c)) idx[fill[r]++] = static_cast<std::uint32_t>(c);
    return SparseMatrixF2(cols_, rows_, std::move(ptr), std::move(idx));
}

SparseMatrixF2 SparseMatrixF2::multiply(const SparseMatrixF2& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("SparseMatrixF2 product: dimension mismatch");
    std::vector<std::size_t> ptr(rhs.cols_ + 1, 0);
    std::vector<std::uint32_t> idx;
    std::vector<std::uint8_t> seen(rows_, 0);
    std::vector<std::uint8_t> odd(rows_, 0);
    std::vector<std::uint32_t> touched;
    for (std::size_t c = 0; c < rhs.cols_; ++c) {
        touched.clear();
        for (std::uint32_t m : rhs.column(c))
            for (std::uint32_t r : column(m)) {
                if (!seen[r]) {
                    seen[r] = 1;
                    touched.push_back(r);
                }
                odd[r] ^= 1;
            }
        std::sort(touched.begin(), touched.end());
        for (std::uint32_t r : touched) {
            if (odd[r]) idx.push_back(r);
            seen[r] = odd[r] = 0;
        }
        ptr[c + 1] = idx.size();
    }
    return SparseMatrixF2(rows_, rhs.cols_, std::move(ptr), std::move(idx));
}

}  // namespace annularkh::gf2
