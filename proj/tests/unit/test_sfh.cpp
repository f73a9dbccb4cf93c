#include <doctest.h>

#include "annularkh/sfh.hpp"
#include "support/fixtures.hpp"

#include <bit>

using namespace annularkh;
using namespace annularkh::sfh;

namespace {

HalfInt half(int twice) { return HalfInt::from_twice(twice); }

std::vector<CircleClass> classes(int t, int n) {
    std::vector<CircleClass> out(static_cast<std::size_t>(t), CircleClass::trivial);
    out.insert(out.end(), static_cast<std::size_t>(n), CircleClass::nontrivial);
    return out;
}

std::size_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::size_t b = 1;
    for (int x = 0; x < k; ++x) b = b * static_cast<std::size_t>(n - x) / static_cast<std::size_t>(x + 1);
    return b;
}

}  // namespace

TEST_CASE("half integers") {
    CHECK(HalfInt(3).to_string() == "3");
    CHECK(half(1).to_string() == "1/2");
    CHECK(half(-3).to_string() == "-3/2");
    CHECK(HalfInt(0).to_string() == "0");
    CHECK((half(1) + half(1)) == HalfInt(1));
    CHECK(-half(3) == half(-3));
    CHECK(half(-1) < HalfInt(0));
    CHECK_FALSE(half(5).is_integer());
}

TEST_CASE("a trivial circle") {
    const VHSpace v(1, 0, classes(1, 0));
    CHECK(v.p() == 0);
    const AMDims expected{{{0, half(1)}, 1}, {{0, half(-1)}, 1}};
    CHECK(v.dims() == expected);
    CHECK(v.top() == AMDegree{0, half(1)});
}

TEST_CASE("an essential circle") {
    const VHSpace v(0, 1, classes(0, 1));
    CHECK(v.p() == 1);
    const AMDims expected{{{0, 0}, 1}, {{-1, -1}, 1}};
    CHECK(v.dims() == expected);
    CHECK(v.dims() == theta());
}

TEST_CASE("two essential circles") {
    const VHSpace v(0, 2, classes(0, 2));
    std::map<HalfInt, std::size_t> a_dims;
    for (const auto& [deg, dim] : v.dims()) a_dims[deg.a] += dim;
    const std::map<HalfInt, std::size_t> expected{{-1, 1}, {0, 2}, {1, 1}};
    CHECK(a_dims == expected);
}

TEST_CASE("bigrading of every monomial") {
    for (int t = 0; t <= 3; ++t)
        for (int n = 0; n <= 3; ++n) {
            CAPTURE(t);
            CAPTURE(n);
            const auto cls = classes(t, n);
            const VHSpace v(t, n, cls);
            const int p = n % 2;
            std::uint32_t nontrivial = 0;
            for (std::size_t c = 0; c < cls.size(); ++c)
                if (cls[c] == CircleClass::nontrivial) nontrivial |= 1u << c;
            for (std::uint32_t mask = 0; mask < v.size(); ++mask) {
                const int factors = std::popcount(mask);
                const int ess = std::popcount(mask & nontrivial);
                // A: -1 per essential factor, M: -1 per factor, shifted by
                // ((n-p)/2, (t+n-p)/2).
                const AMDegree expected{half(n - p - 2 * ess), half(t + n - p - 2 * factors)};
                CHECK(v.degree(mask) == expected);
            }
            CHECK(symmetric(v));
        }
}

TEST_CASE("the symmetry pairs theta+ with theta-") {
    const VHSpace v(0, 1, classes(0, 1));
    // (A, M) -> (-A-1, M-2A-1) swaps (0,0) and (-1,-1).
    for (const auto& [deg, dim] : v.dims()) {
        const AMDegree image{-deg.a - 1, deg.m - deg.a - deg.a - 1};
        CHECK(image != deg);
        CHECK(v.dims().count(image) == 1);
    }
}

TEST_CASE("predicted ranks") {
    const auto one = predicted_ranks(1, 0);
    CHECK(one.p == 0);
    CHECK(one.cover_rank == 2);
    CHECK(one.hf_rank == 1);
    CHECK(one.hfk_rank == 2);
    CHECK_FALSE(one.theta_factor);
    CHECK(one.shift_ambiguous);
    CHECK(one.limit_shape != one.limit_shape_alternate);

    const auto two = predicted_ranks(0, 2);
    CHECK(two.cover_rank == 4);
    CHECK(two.hf_rank == 2);

    const auto mixed = predicted_ranks(2, 1);
    CHECK(mixed.p == 1);
    CHECK(mixed.cover_rank == 8);
    CHECK(mixed.hf_rank == 4);
    CHECK(mixed.hfk_rank == 4);
    CHECK(mixed.theta_factor);
    CHECK_FALSE(mixed.shift_ambiguous);
    const std::map<HalfInt, std::size_t> maslov{{-1, 1}, {0, 2}, {1, 1}};
    CHECK(mixed.hf_maslov == maslov);

    const auto empty = predicted_ranks(0, 0);
    CHECK(empty.cover_rank == 1);
    CHECK(empty.hf_rank == 1);
}

TEST_CASE("V_H has the predicted rank and HF-hat Maslov profile") {
    for (int t = 0; t <= 6; ++t)
        for (int n = 0; t + n <= 6; ++n) {
            if (t + n == 0) continue;
            CAPTURE(t);
            CAPTURE(n);
            const VHSpace v(t, n, classes(t, n));
            const auto pred = predicted_ranks(t, n);
            std::size_t total = 0;
            for (const auto& [deg, dim] : v.dims()) total += dim;
            CHECK(total == pred.cover_rank);
            std::size_t hf = 0;
            for (const auto& [m, dim] : pred.hf_maslov) {
                CHECK(dim == binomial(t + n - 1, (t + n - 1 - m.twice()) / 2));
                hf += dim;
            }
            CHECK(hf == pred.hf_rank);
        }
}

TEST_CASE("Khovanov generators match V_H on every resolution of the corpus") {
    std::size_t checked = 0;
    for (const auto& d : fixtures::corpus()) {
        if (d.crossing_count() > 6) continue;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << d.crossing_count()); ++bits) {
            const auto r = resolve(d, Resolution(d.crossing_count(), bits));
            const auto rep = check_equivalence(r);
            CAPTURE(d.name());
            CAPTURE(rep.mismatch);
            CHECK(rep.pass);
            CHECK(rep.generators == (std::size_t{1} << r.circles.size()));
            CHECK(static_cast<std::size_t>(rep.t) == r.trivial_count());
            ++checked;
        }
    }
    CHECK(checked >= 200);
}

TEST_CASE("v_h of a resolved diagram") {
    const auto& d = fixtures::corpus_entry("loops_t1_n1");
    const VHSpace v = v_h(resolve(d, Resolution()));
    CHECK(v.t() == 1);
    CHECK(v.n() == 1);
    CHECK(v.size() == 4);
    const auto pred = predicted_ranks(resolve(d, Resolution()));
    CHECK(pred.theta_factor);
}
