#include <doctest.h>

#include "annularkh/gf2.hpp"
#include "annularkh/graded.hpp"
#include "annularkh/simd.hpp"

#include <random>

using namespace annularkh;
using namespace annularkh::gf2;

namespace {

MatrixF2 random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density) {
    std::bernoulli_distribution bit(density);
    MatrixF2 m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (bit(rng)) m.set(r, c);
    return m;
}

// Rank by brute force over byte matrices.
std::size_t naive_rank(const MatrixF2& m) {
    std::vector<std::vector<char>> a(m.rows(), std::vector<char>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m.get(r, c);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t p = rank;
        while (p < m.rows() && !a[p][c]) ++p;
        if (p == m.rows()) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (r != rank && a[r][c])
                for (std::size_t k = 0; k < m.cols(); ++k) a[r][k] ^= a[rank][k];
        ++rank;
    }
    return rank;
}

// Rank of the block of m with columns [0, b] and rows (a, end), i.e. the map
// from filtration <= b to the quotient by filtration <= a, with row and
// column positions standing in for filtration levels.
std::size_t block_rank(const MatrixF2& m, std::int64_t a, std::int64_t b) {
    if (b < 0 || a + 1 >= static_cast<std::int64_t>(m.rows())) return 0;
    const std::size_t r0 = static_cast<std::size_t>(a + 1);
    MatrixF2 sub(m.rows() - r0, static_cast<std::size_t>(b + 1));
    for (std::size_t r = r0; r < m.rows(); ++r)
        for (std::size_t c = 0; c <= static_cast<std::size_t>(b); ++c)
            if (m.get(r, c)) sub.set(r - r0, c);
    return naive_rank(sub);
}

}  // namespace

TEST_CASE("bit vectors") {
    BitVector v(130);
    v.set(0);
    v.set(129);
    v.flip(64);
    CHECK(v.count() == 3);
    CHECK(v.get(64));
    BitVector w = v;
    w ^= v;
    CHECK(w.none());
    CHECK(v.to_string().size() == 130);
}

TEST_CASE("dense matrix algebra") {
    std::mt19937_64 rng(1);
    const MatrixF2 a = random_matrix(rng, 7, 9, 0.4);
    const MatrixF2 b = random_matrix(rng, 9, 5, 0.4);
    CHECK(MatrixF2::identity(7) * a == a);
    CHECK((a * b).transpose() == b.transpose() * a.transpose());
    MatrixF2 z = a;
    z += a;
    CHECK(z.is_zero());
    BitVector x(9);
    x.set(2);
    x.set(8);
    BitVector expected(7);
    for (std::size_t r = 0; r < 7; ++r) expected.set(r, a.get(r, 2) != a.get(r, 8));
    CHECK(a.apply(x) == expected);
}

TEST_CASE("sparse construction cancels duplicates and round-trips") {
    const auto m = SparseMatrixF2::from_entries(3, 3, {{0, 0}, {1, 0}, {1, 0}, {2, 2}});
    CHECK(m.nnz() == 2);
    CHECK(m.get(0, 0));
    CHECK_FALSE(m.get(1, 0));
    CHECK(SparseMatrixF2::from_dense(m.to_dense()) == m);
    CHECK(m.transpose().transpose() == m);
}

TEST_CASE("sparse product agrees with dense product") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 20; ++trial) {
        const MatrixF2 a = random_matrix(rng, 11, 13, 0.2);
        const MatrixF2 b = random_matrix(rng, 13, 6, 0.2);
        CHECK(SparseMatrixF2::from_dense(a).multiply(SparseMatrixF2::from_dense(b)).to_dense() == a * b);
    }
}

TEST_CASE("sparse, dense and naive ranks agree") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + rng() % 90;
        const std::size_t cols = 1 + rng() % 90;
        const double density = trial % 3 == 0 ? 0.5 : 0.04;
        const MatrixF2 m = random_matrix(rng, rows, cols, density);
        const std::size_t expected = naive_rank(m);
        CHECK(rank(m) == expected);
        CHECK(rank(SparseMatrixF2::from_dense(m)) == expected);
    }
}

TEST_CASE("rank is the same with every kernel variant") {
    std::mt19937_64 rng(4);
    const MatrixF2 m = random_matrix(rng, 300, 280, 0.3);
    const simd::Isa before = simd::active().isa;
    simd::select(simd::Isa::scalar);
    const std::size_t scalar = rank(m);
    for (simd::Isa isa : {simd::Isa::avx2, simd::Isa::neon}) {
        if (!simd::supported(isa)) continue;
        simd::select(isa);
        CHECK(rank(m) == scalar);
    }
    simd::select(before);
}

TEST_CASE("kernel basis vectors are independent and annihilated") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const MatrixF2 m = random_matrix(rng, 12, 20, 0.3);
        const auto basis = kernel_basis(m);
        CHECK(basis.size() == m.cols() - rank(m));
        MatrixF2 stacked(basis.size(), m.cols());
        for (std::size_t b = 0; b < basis.size(); ++b) {
            CHECK(m.apply(basis[b]).none());
            for (std::size_t c = 0; c < m.cols(); ++c) stacked.set(b, c, basis[b].get(c));
        }
        CHECK(rank(stacked) == basis.size());
    }
}

TEST_CASE("ordered reduction pairs count every lower-left block rank") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 40; ++trial) {
        const MatrixF2 m = random_matrix(rng, 1 + rng() % 14, 1 + rng() % 14, 0.3);
        const auto low = reduce_ordered(SparseMatrixF2::from_dense(m));
        std::size_t pivots = 0;
        for (auto l : low) pivots += l >= 0 ? 1 : 0;
        CHECK(pivots == rank(m));
        for (std::int64_t a = -1; a < static_cast<std::int64_t>(m.rows()); ++a)
            for (std::int64_t b = -1; b < static_cast<std::int64_t>(m.cols()); ++b) {
                std::size_t rho = 0;
                for (std::size_t c = 0; c < low.size(); ++c)
                    rho += (static_cast<std::int64_t>(c) <= b && low[c] > a) ? 1 : 0;
                CHECK(rho == block_rank(m, a, b));
            }
    }
}

TEST_CASE("homology of a small graded complex") {
    // x -> y + z, with y, z in the same degree: H has one class in degree 1.
    const std::vector<Degree> degrees{{0, 0, 0}, {1, 0, 0}, {1, 0, 0}};
    const GradedComplex c(degrees, SparseMatrixF2::from_entries(3, 3, {{1, 0}, {2, 0}}));
    CHECK_NOTHROW(c.validate({0}));
    const auto h = homology_dims(c);
    CHECK(h.total() == 1);
    CHECK(h.at({1, 0, 0}) == 1);
}

TEST_CASE("validation rejects bad differentials") {
    const std::vector<Degree> degrees{{0, 0, 0}, {1, 0, 0}, {2, 0, 0}};
    const GradedComplex not_square_zero(degrees, SparseMatrixF2::from_entries(3, 3, {{1, 0}, {2, 1}}));
    CHECK_THROWS_AS(not_square_zero.validate({0}), ComplexError);
    const std::vector<Degree> shifted{{0, 0, 0}, {1, 2, 0}};
    const GradedComplex wrong_j(shifted, SparseMatrixF2::from_entries(2, 2, {{1, 0}}));
    CHECK_THROWS_AS(wrong_j.validate({0}), ComplexError);
    const std::vector<Degree> raised{{0, 0, 0}, {1, 0, 2}};
    const GradedComplex raises_k(raised, SparseMatrixF2::from_entries(2, 2, {{1, 0}}));
    CHECK_THROWS_AS(raises_k.validate({0, 2}), ComplexError);
}
