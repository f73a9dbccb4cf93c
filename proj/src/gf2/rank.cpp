#include "annularkh/gf2.hpp"
#include "annularkh/simd.hpp"

#include <bit>
#include <algorithm>
#include <functional>
#include <iterator>
#include <queue>

namespace annularkh::gf2 {
namespace {

// Forward elimination; rows below the pivot have zeros left of the pivot
// column, so XORs start at the pivot word.
std::size_t eliminate(MatrixF2& m, std::vector<std::size_t>* pivots) {
    const auto& k = simd::active();
    const std::size_t stride = m.stride();
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        const std::size_t word = c >> 6;
        const std::uint64_t bit = std::uint64_t{1} << (c & 63);
        std::size_t p = r;
        while (p < m.rows() && !(m.row(p)[word] & bit)) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, r);
        for (std::size_t q = r + 1; q < m.rows(); ++q)
            if (m.row(q)[word] & bit) k.xor_into(m.row(q) + word, m.row(r) + word, stride - word);
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return r;
}

}  // namespace

std::size_t rank(MatrixF2 m) { return eliminate(m, nullptr); }

std::vector<std::size_t> reduce_rref(MatrixF2& m) {
    std::vector<std::size_t> pivots;
    const std::size_t r = eliminate(m, &pivots);
    const auto& k = simd::active();
    for (std::size_t p = r; p-- > 0;) {
        const std::size_t c = pivots[p];
        const std::size_t word = c >> 6;
        const std::uint64_t bit = std::uint64_t{1} << (c & 63);
        for (std::size_t q = 0; q < p; ++q)
            if (m.row(q)[word] & bit) k.xor_into(m.row(q) + word, m.row(p) + word, m.stride() - word);
    }
    return pivots;
}

std::vector<BitVector> kernel_basis(const MatrixF2& m) {
    MatrixF2 r = m;
    const std::vector<std::size_t> pivots = reduce_rref(r);
    std::vector<char> is_pivot(m.cols(), 0);
    for (std::size_t c : pivots) is_pivot[c] = 1;
    std::vector<BitVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        BitVector v(m.cols());
        v.set(free);
        for (std::size_t p = 0; p < pivots.size(); ++p)
            if (r.get(p, free)) v.set(pivots[p]);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Sparse elimination with Markowitz-style pivoting: always eliminate a
// column of least weight through its shortest row. Cube differentials stay
// sparse under this order; once the active part fills in past 1/32 density
// the rest goes to the dense kernel.
std::size_t rank(const SparseMatrixF2& m) {
    const std::size_t R = m.rows();
    const std::size_t C = m.cols();
    if (R == 0 || C == 0 || m.nnz() == 0) return 0;

    std::vector<std::vector<std::uint32_t>> rows(R);
    std::vector<std::vector<std::uint32_t>> cols(C);  // may hold stale rows
    std::vector<std::uint32_t> count(C, 0);
    for (std::size_t c = 0; c < C; ++c) {
        for (std::uint32_t r : m.column(c)) rows[r].push_back(static_cast<std::uint32_t>(c));
        cols[c].assign(m.column(c).begin(), m.column(c).end());
        count[c] = static_cast<std::uint32_t>(cols[c].size());
    }
    std::vector<char> row_alive(R, 1);
    std::size_t live_rows = R, live_cols = 0, nnz = m.nnz();
    using Entry = std::pair<std::uint32_t, std::uint32_t>;  // (count, column)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
    for (std::size_t c = 0; c < C; ++c)
        if (count[c]) {
            heap.emplace(count[c], static_cast<std::uint32_t>(c));
            ++live_cols;
        }

    auto contains = [&](std::uint32_t r, std::uint32_t c) {
        return row_alive[r] && std::binary_search(rows[r].begin(), rows[r].end(), c);
    };

    std::size_t rank = 0;
    std::vector<std::uint32_t> merged;
    while (!heap.empty()) {
        if (nnz * 32 > live_rows * live_cols && live_cols > 64) break;
        const auto [k, c] = heap.top();
        heap.pop();
        if (k != count[c] || k == 0) continue;

        // Shortest live row through c; drop stale entries on the way.
        std::uint32_t pivot = UINT32_MAX;
        auto& list = cols[c];
        std::size_t keep = 0;
        for (std::uint32_t r : list) {
            if (!contains(r, c)) continue;
            list[keep++] = r;
            if (pivot == UINT32_MAX || rows[r].size() < rows[pivot].size()) pivot = r;
        }
        list.resize(keep);
        // A row can leave and rejoin a column, leaving duplicates behind.
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        ++rank;
        const std::vector<std::uint32_t> prow = std::move(rows[pivot]);
        row_alive[pivot] = 0;
        --live_rows;
        nnz -= prow.size();
        for (std::uint32_t x : prow)
            if (--count[x] == 0) --live_cols;
            else if (x != c) heap.emplace(count[x], x);

        for (std::uint32_t r : list) {
            if (r == pivot) continue;
            auto& row = rows[r];
            merged.clear();
            std::set_symmetric_difference(row.begin(), row.end(), prow.begin(), prow.end(), std::back_inserter(merged));
            // Columns gained by r; those it lost are only counted down.
            auto a = row.begin();
            for (std::uint32_t x : prow) {
                while (a != row.end() && *a < x) ++a;
                if (a != row.end() && *a == x) {
                    if (--count[x] == 0) --live_cols;
                    else heap.emplace(count[x], x);
                } else {
                    if (count[x]++ == 0) ++live_cols;
                    cols[x].push_back(r);
                    heap.emplace(count[x], x);
                }
            }
            nnz = nnz - row.size() + merged.size();
            row.swap(merged);
        }
        list.clear();
        if (count[c] != 0) throw std::logic_error("rank: pivot column not cleared");
    }

    if (live_cols == 0 || live_rows == 0) return rank;
    std::vector<std::uint32_t> col_map(C, UINT32_MAX);
    std::size_t core_cols = 0;
    for (std::size_t c = 0; c < C; ++c)
        if (count[c]) col_map[c] = static_cast<std::uint32_t>(core_cols++);
    std::size_t core_rows = 0;
    for (std::size_t r = 0; r < R; ++r) core_rows += (row_alive[r] && !rows[r].empty()) ? 1 : 0;
    MatrixF2 core(core_rows, core_cols);
    std::size_t at = 0;
    for (std::size_t r = 0; r < R; ++r) {
        if (!row_alive[r] || rows[r].empty()) continue;
        for (std::uint32_t c : rows[r]) core.set(at, col_map[c]);
        ++at;
    }
    return rank + gf2::rank(std::move(core));
}

std::vector<std::int64_t> reduce_ordered(const SparseMatrixF2& m) {
    const std::size_t R = m.rows();
    const std::size_t words = (R + 63) / 64;
    std::vector<std::int64_t> low(m.cols(), -1);
    std::vector<std::int64_t> pivot_of(R, -1);
    std::vector<std::vector<std::uint32_t>> reduced(m.cols());
    std::vector<std::uint64_t> work(words, 0);

    auto find_low = [&](std::int64_t from) -> std::int64_t {
        for (std::int64_t w = from >> 6; w >= 0; --w) {
            std::uint64_t bits = work[static_cast<std::size_t>(w)];
            if (w == (from >> 6)) {
                const int shift = 63 - static_cast<int>(from & 63);
                bits = (bits << shift) >> shift;
            }
            if (bits) return w * 64 + 63 - std::countl_zero(bits);
        }
        return -1;
    };

    for (std::size_t c = 0; c < m.cols(); ++c) {
        auto col = m.column(c);
        if (col.empty()) continue;
        for (std::uint32_t r : col) work[r >> 6] ^= std::uint64_t{1} << (r & 63);
        std::int64_t l = col.back();
        while (l >= 0 && pivot_of[static_cast<std::size_t>(l)] >= 0) {
            for (std::uint32_t r : reduced[static_cast<std::size_t>(pivot_of[static_cast<std::size_t>(l)])])
                work[r >> 6] ^= std::uint64_t{1} << (r & 63);
            l = find_low(l);
        }
        if (l < 0) continue;
        low[c] = l;
        pivot_of[static_cast<std::size_t>(l)] = static_cast<std::int64_t>(c);
        auto& out = reduced[c];
        for (std::size_t w = 0; w <= static_cast<std::size_t>(l >> 6); ++w) {
            std::uint64_t bits = work[w];
            while (bits) {
                out.push_back(static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits)));
                bits &= bits - 1;
            }
            work[w] = 0;
        }
    }
    return low;
}

}  // namespace annularkh::gf2
