#include <doctest.h>

#include "oracle/plain_khovanov.hpp"

// The reference implementation has to reproduce tabulated values before it
// is trusted as an oracle.

TEST_CASE("oracle reproduces the tabulated GF(2) homology of the left trefoil") {
    oracle::PD pd;
    pd.crossings = {{1, 4, 2, 5}, {3, 6, 4, 1}, {5, 2, 6, 3}};
    pd.signs = oracle::signs_from_consecutive_labels(pd.crossings);
    CHECK(pd.signs == std::vector<int>{-1, -1, -1});
    const oracle::Bigraded expected{{{0, -1}, 1}, {{0, -3}, 1}, {{-2, -5}, 1},
                                    {{-2, -7}, 1}, {{-3, -7}, 1}, {{-3, -9}, 1}};
    CHECK(oracle::khovanov(pd) == expected);
}

TEST_CASE("oracle: crossingless unknot and two-component unlink") {
    oracle::PD unknot;
    unknot.free_loops_trivial = 1;
    CHECK(oracle::khovanov(unknot) == oracle::Bigraded{{{0, 1}, 1}, {{0, -1}, 1}});
    oracle::PD unlink;
    unlink.free_loops_trivial = 2;
    CHECK(oracle::total(oracle::khovanov(unlink)) == 4);
}

TEST_CASE("oracle: positive Hopf link") {
    // two components labelled 1,2 and 3,4
    oracle::PD pd;
    pd.crossings = {{4, 1, 3, 2}, {2, 3, 1, 4}};
    pd.signs = {1, 1};
    // Kh of the positive Hopf link: q^0 + q^2 + t^2 q^4 + t^2 q^6
    const oracle::Bigraded expected{{{0, 0}, 1}, {{0, 2}, 1}, {{2, 4}, 1}, {{2, 6}, 1}};
    CHECK(oracle::khovanov(pd) == expected);
}

TEST_CASE("oracle: one-crossing unknot diagrams have unknot homology") {
    oracle::PD kink;
    kink.crossings = {{1, 2, 2, 1}};
    kink.signs = {-1};
    CHECK(oracle::khovanov(kink) == oracle::Bigraded{{{0, 1}, 1}, {{0, -1}, 1}});
    oracle::PD other;
    other.crossings = {{1, 1, 2, 2}};
    other.signs = {1};
    CHECK(oracle::khovanov(other) == oracle::Bigraded{{{0, 1}, 1}, {{0, -1}, 1}});
}
