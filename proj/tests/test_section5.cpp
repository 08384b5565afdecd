#include <catch2/catch_amalgamated.hpp>

#include "diffgal/section5.hpp"

using namespace diffgal;

TEST_CASE("alternate sl2 degree argument forces w = 0") {
    for (int n : {1, 2}) {
        auto rep = alternate_sl2_check(n, 8);
        REQUIRE(rep.passed);
        for (const auto& br : rep.branches) {
            REQUIRE(br.only_zero);
            REQUIRE(br.null_dim == 0);
            REQUIRE(br.deg_q == br.m - 2 * n + 1);
            REQUIRE(br.forced_c);
        }
    }
}

TEST_CASE("passing never flips to failing as m_max grows") {
    auto small = alternate_sl2_check(2, 4);
    auto large = alternate_sl2_check(2, 12);
    REQUIRE(small.passed);
    REQUIRE(large.passed);
    // branch reports for shared m agree
    for (size_t i = 0; i < small.branches.size(); ++i) {
        REQUIRE(small.branches[i].null_dim == large.branches[i].null_dim);
    }
}

TEST_CASE("substitution x = z^n transforms the equation") {
    for (int n = 1; n <= 4; ++n) {
        auto rep = check_section5_equation(n);
        REQUIRE(rep.substitution_ok);
        REQUIRE(rep.equivariance_ok);
    }
}
