#include "annularkh/gf2.hpp"
#include "annularkh/simd.hpp"

#include <algorithm>
#include <stdexcept>

namespace annularkh::gf2 {

MatrixF2::MatrixF2(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64), bits_(rows * ((cols + 63) / 64), 0) {}

MatrixF2 MatrixF2::identity(std::size_t n) {
    MatrixF2 m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

void MatrixF2::set(std::size_t r, std::size_t c, bool value) {
    const std::uint64_t bit = std::uint64_t{1} << (c & 63);
    std::uint64_t& w = bits_[r * stride_ + (c >> 6)];
    w = value ? (w | bit) : (w & ~bit);
}

void MatrixF2::xor_row(std::size_t dst, std::size_t src) { simd::active().xor_into(row(dst), row(src), stride_); }

void MatrixF2::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(row(a), row(a) + stride_, row(b));
}

BitVector MatrixF2::column(std::size_t c) const {
    BitVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (get(r, c)) v.set(r);
    return v;
}

BitVector MatrixF2::apply(const BitVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("MatrixF2::apply: dimension mismatch");
    BitVector out(rows_);
    const auto& k = simd::active();
    std::vector<std::uint64_t> tmp(stride_);
    for (std::size_t r = 0; r < rows_; ++r) {
        const std::uint64_t* a = row(r);
        const auto w = v.words();
        for (std::size_t i = 0; i < stride_; ++i) tmp[i] = a[i] & w[i];
        if (k.popcount(tmp.data(), stride_) & 1u) out.set(r);
    }
    return out;
}

MatrixF2 MatrixF2::transpose() const {
    MatrixF2 t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r);
    return t;
}

MatrixF2 MatrixF2::operator*(const MatrixF2& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("MatrixF2 product: dimension mismatch");
    MatrixF2 out(rows_, rhs.cols_);
    const auto& k = simd::active();
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t m = 0; m < cols_; ++m)
            if (get(r, m)) k.xor_into(out.row(r), rhs.row(m), out.stride_);
    return out;
}

MatrixF2& MatrixF2::operator+=(const MatrixF2& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("MatrixF2 sum: dimension mismatch");
    simd::active().xor_into(bits_.data(), rhs.bits_.data(), bits_.size());
    return *this;
}

bool MatrixF2::is_zero() const { return simd::active().all_zero(bits_.data(), bits_.size()); }

std::size_t MatrixF2::count_ones() const { return simd::active().popcount(bits_.data(), bits_.size()); }

std::string MatrixF2::to_string() const {
    std::string s;
    s.reserve(rows_ * (cols_ + 1));
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) s.push_back(get(r, c) ? '1' : '0');
        s.push_back('\n');
    }
    return s;
}

}  // namespace annularkh::gf2
