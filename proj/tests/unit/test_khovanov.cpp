#include <doctest.h>

#include "annularkh/khovanov.hpp"
#include "support/fixtures.hpp"

using namespace annularkh;
using namespace annularkh::khovanov;

namespace {

constexpr std::size_t oracle_crossing_limit = 8;

}  // namespace

TEST_CASE("right trefoil total homology matches the tabulated left trefoil table") {
    const auto mine = fixtures::to_map(total_homology(fixtures::right_trefoil()));
    const auto reference = oracle::khovanov(fixtures::left_trefoil_pd());
    CHECK(mine == reference);
    CHECK(oracle::total(mine) == 6);
}

TEST_CASE("corpus agrees with the reference implementation") {
    // The reference uses the opposite smoothing order, so its tables are the
    // ones of the mirror: every degree is negated.
    for (const auto& d : fixtures::corpus()) {
        if (d.crossing_count() > oracle_crossing_limit) continue;
        CAPTURE(d.name());
        const auto pd = fixtures::to_pd(d);
        const FilteredComplex c = build_complex(d);
        CHECK(fixtures::to_map(total_homology(c)) == fixtures::negated(oracle::khovanov(pd)));
        CHECK(fixtures::to_map(annular_homology(c)) == fixtures::negated(oracle::annular_khovanov(pd)));
    }
}

TEST_CASE("crossingless circles") {
    const auto& unknot = fixtures::corpus_entry("loop_trivial");
    const auto kh = annular_homology(unknot);
    CHECK(kh.total() == 2);
    CHECK(kh.at({0, 1, 0}) == 1);
    CHECK(kh.at({0, -1, 0}) == 1);

    const auto essential = annular_homology(fixtures::corpus_entry("loop_essential"));
    CHECK(essential.at({0, 1, 1}) == 1);
    CHECK(essential.at({0, -1, -1}) == 1);

    const auto six = annular_homology(fixtures::corpus_entry("loops_n6"));
    CHECK(six.total() == 64);
    CHECK(six.at({0, 6, 6}) == 1);
    CHECK(six.at({0, 0, 0}) == 20);
}

TEST_CASE("vertex gradings") {
    const VertexSpace v({CircleClass::trivial, CircleClass::nontrivial, CircleClass::nontrivial});
    CHECK(v.size() == 8);
    CHECK(v.trivial() == 1);
    CHECK(v.nontrivial() == 2);
    CHECK(v.f(0) == 2);
    CHECK(v.f(0b001) == 2);
    CHECK(v.f(0b110) == -2);
    CHECK(v.q(0) == 3);
    CHECK(v.q(0b111) == -3);
    const Degree deg = generator_degree(v, 0b010, 2, 3, 1);
    // i = |I| - n+, j = q + |I| + n- - 2 n+, k = f
    CHECK(deg == Degree{-1, 1 + 2 + 1 - 6, 0});
}

TEST_CASE("merge and split maps") {
    const VertexSpace two({CircleClass::nontrivial, CircleClass::nontrivial});
    const VertexSpace one({CircleClass::trivial});
    const EdgeMap m = merge_map(two, one, {0, 0});
    // 1 -> 1, x1 -> x, x2 -> x, x1 x2 -> 0
    CHECK(m.matrix.get(0, 0));
    CHECK(m.matrix.get(1, 1));
    CHECK(m.matrix.get(1, 2));
    CHECK_FALSE(m.matrix.get(0, 3));
    CHECK_FALSE(m.matrix.get(1, 3));
    // Two essential circles merging into a trivial one: 1 -> 1 drops k by 2.
    CHECK_FALSE(m.graded.get(0, 0));
    CHECK(m.graded.get(1, 1));

    const EdgeMap s = split_map(one, two, {0, 0});
    // 1 -> x1 + x2, x -> x1 x2
    CHECK(s.matrix.get(1, 0));
    CHECK(s.matrix.get(2, 0));
    CHECK(s.matrix.get(3, 1));
    CHECK(s.graded.get(1, 0));
    CHECK(s.graded.get(2, 0));
    CHECK_FALSE(s.graded.get(3, 1));

    CHECK_THROWS_AS(merge_map(two, one, {0, 1}), MapError);
    const VertexSpace mixed({CircleClass::trivial, CircleClass::nontrivial});
    CHECK_THROWS_AS(merge_map(mixed, one, {0, 0}), MapError);
}

TEST_CASE("built complexes satisfy d^2 = 0 and the degree rules") {
    for (const char* name : {"trefoil_axis_b", "borromean_axis", "braid4_c", "unknot_doubled"}) {
        CAPTURE(name);
        const FilteredComplex c = build_complex(fixtures::corpus_entry(name), {0, false});
        CHECK_NOTHROW(c.complex().validate({0, 2}));
        CHECK_NOTHROW(c.graded().validate({0}));
        CHECK(c.merge_count() + c.split_count() ==
              c.diagram().crossing_count() * (std::size_t{1} << (c.diagram().crossing_count() - 1)));
    }
}

TEST_CASE("thread count does not change the result") {
    const auto& d = fixtures::corpus_entry("torus_3_4_axis");
    const auto one = annular_homology(d, 1);
    CHECK(annular_homology(d, 4) == one);
    CHECK(total_homology(build_complex(d, {3, true}), 2) == total_homology(d, 1));
}

TEST_CASE("generator ids and lookup") {
    const FilteredComplex c = build_complex(fixtures::corpus_entry("sigma1"));
    REQUIRE(c.size() == 6);
    for (std::size_t g = 0; g < c.size(); ++g) {
        const auto [v, mask] = c.locate(g);
        CHECK(c.index_of(v, mask) == g);
    }
    CHECK(c.generator_id(0).rfind("0:{", 0) == 0);
}

TEST_CASE("Euler characteristic is the same on chains and homology") {
    for (const char* name : {"mixed_3braid_axis", "figure_eight_braid", "loops_t2_n4"}) {
        CAPTURE(name);
        const FilteredComplex c = build_complex(fixtures::corpus_entry(name));
        CHECK(euler_characteristic(c.graded().chain_dims()) == euler_characteristic(annular_homology(c)));
    }
    Polynomial p;
    p.add(1, 1, 1);
    p.add(-1, -1, 1);
    p.add(0, 0, 0);
    CHECK(p.to_string() == "tq + t^-1q^-1");
}

TEST_CASE("isotopic corpus pairs share their homology") {
    for (const auto& d : fixtures::corpus()) {
        if (d.isotopic_to().empty()) continue;
        CAPTURE(d.name());
        const auto& other = fixtures::corpus_entry(d.isotopic_to());
        CHECK(annular_homology(d) == annular_homology(other));
    }
}
