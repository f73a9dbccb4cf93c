#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace annularkh::gf2 {

/// Fixed-length vector over GF(2), packed 64 bits per word.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size);

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool value = true);
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    std::size_t count() const;
    bool none() const;
    BitVector& operator^=(const BitVector& other);
    bool operator==(const BitVector& other) const = default;

    std::span<std::uint64_t> words() { return words_; }
    std::span<const std::uint64_t> words() const { return words_; }
    std::string to_string() const;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense matrix over GF(2) with bit-packed rows.
class MatrixF2 {
public:
    MatrixF2() = default;
    MatrixF2(std::size_t rows, std::size_t cols);

    static MatrixF2 identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t stride() const { return stride_; }

    bool get(std::size_t r, std::size_t c) const { return (bits_[r * stride_ + (c >> 6)] >> (c & 63)) & 1u; }
    void set(std::size_t r, std::size_t c, bool value = true);
    void flip(std::size_t r, std::size_t c) { bits_[r * stride_ + (c >> 6)] ^= std::uint64_t{1} << (c & 63); }

    std::uint64_t* row(std::size_t r) { return bits_.data() + r * stride_; }
    const std::uint64_t* row(std::size_t r) const { return bits_.data() + r * stride_; }
    void xor_row(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);

    BitVector column(std::size_t c) const;
    BitVector apply(const BitVector& v) const;

    MatrixF2 transpose() const;
    MatrixF2 operator*(const MatrixF2& rhs) const;
    MatrixF2& operator+=(const MatrixF2& rhs);
    bool is_zero() const;
    std::size_t count_ones() const;
    bool operator==(const MatrixF2& other) const = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Compressed sparse column matrix over GF(2). Row indices within a column
/// are strictly increasing.
class SparseMatrixF2 {
public:
    SparseMatrixF2() : col_ptr_(1, 0) {}
    SparseMatrixF2(std::size_t rows, std::size_t cols);
    SparseMatrixF2(std::size_t rows, std::size_t cols, std::vector<std::size_t> col_ptr,
                   std::vector<std::uint32_t> row_idx);

    /// Entries are (row, col); repeated entries cancel in pairs.
    static SparseMatrixF2 from_entries(std::size_t rows, std::size_t cols,
                                       std::vector<std::pair<std::uint32_t, std::uint32_t>> entries);
    static SparseMatrixF2 from_columns(std::size_t rows, const std::vector<std::vector<std::uint32_t>>& columns);
    static SparseMatrixF2 from_dense(const MatrixF2& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nnz() const { return row_idx_.size(); }

    std::span<const std::uint32_t> column(std::size_t c) const {
        return {row_idx_.data() + col_ptr_[c], col_ptr_[c + 1] - col_ptr_[c]};
    }
    bool get(std::size_t r, std::size_t c) const;

    MatrixF2 to_dense() const;
    SparseMatrixF2 transpose() const;
    SparseMatrixF2 multiply(const SparseMatrixF2& rhs) const;
    bool operator==(const SparseMatrixF2& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::size_t> col_ptr_;
    std::vector<std::uint32_t> row_idx_;
};

/// Rank by Gaussian elimination over GF(2).
std::size_t rank(MatrixF2 m);

/// Rank of a sparse matrix. Pivots are chosen sparsely (shortest column,
/// then shortest row) until the remainder is dense enough to hand to the
/// packed elimination.
std::size_t rank(const SparseMatrixF2& m);

/// Row-reduces in place to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> reduce_rref(MatrixF2& m);

/// Basis of {v : m v = 0}.
std::vector<BitVector> kernel_basis(const MatrixF2& m);

/// Standard column reduction in the given index order: each column is reduced
/// by earlier columns until its lowest (largest row index) entry is unique.
/// Returns that lowest row for each column, or -1 when it reduces to zero.
std::vector<std::int64_t> reduce_ordered(const SparseMatrixF2& m);

}  // namespace annularkh::gf2
