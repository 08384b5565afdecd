#include <catch2/catch_amalgamated.hpp>

#include "diffgal/verify.hpp"

using namespace diffgal;

TEST_CASE("the worked sl2 system passes every check") {
    SystemRecord rec = build_sl2_sqrtx();
    REQUIRE(rec.ext_n == 2);
    REQUIRE(rec.total_dim() == 2);
    auto bundle = check_system(rec);
    for (const auto& c : bundle.checks) {
        INFO(c.id << ": " << c.status << " " << c.evidence);
        REQUIRE(c.status == "pass");
    }
    REQUIRE(bundle.all_passed());
}

TEST_CASE("each documented mutation fails exactly its targeted check") {
    SystemRecord base = build_sl2_sqrtx();
    for (Mutation m : {Mutation::rational_eigenvalues, Mutation::zero_nilpotent,
                       Mutation::point_into_bad_set, Mutation::equivariance_sign}) {
        SystemRecord mutated = mutate_system(base, m);
        auto bundle = check_system(mutated);
        REQUIRE(!bundle.all_passed());
        std::string target = mutation_target(m);
        int failures = 0;
        for (const auto& c : bundle.checks) {
            if (c.status == "fail") {
                INFO(mutation_name(m) << " failed at " << c.id);
                REQUIRE(c.id == target);
                ++failures;
            }
        }
        REQUIRE(failures == 1);
    }
}

TEST_CASE("product systems: sl2 x sl3 blocks verify and stay disjoint") {
    SystemRecord rec = assemble_group_equation(
        {{Kind::A, 1}, {Kind::A, 2}}, ActionSpec::trivial, 1,
        {{{Rat(1), std::nullopt}, {Rat(2), std::nullopt}, {Rat(3), std::nullopt}},
         {{Rat(5), std::nullopt}, {Rat(6), std::nullopt}, {Rat(7), std::nullopt}}});
    REQUIRE(rec.total_dim() == 5);
    auto bundle = check_system(rec);
    for (const auto& c : bundle.checks) {
        INFO(c.id << ": " << c.status << " " << c.evidence);
        REQUIRE(c.status == "pass");
    }
    // off-diagonal blocks are zero
    for (int i = 0; i < 2; ++i) {
        for (int j = 2; j < 5; ++j) {
            REQUIRE(rec.a(i, j).is_zero());
            REQUIRE(rec.a(j, i).is_zero());
        }
    }
}

TEST_CASE("colliding point plans are rejected") {
    REQUIRE_THROWS_AS(
        assemble_group_equation(
            {{Kind::A, 1}, {Kind::A, 1}}, ActionSpec::trivial, 1,
            {{{Rat(1), std::nullopt}, {Rat(2), std::nullopt}, {Rat(3), std::nullopt}},
             {{Rat(3), std::nullopt}, {Rat(6), std::nullopt}, {Rat(7), std::nullopt}}}),
        BadPointError);
    REQUIRE_THROWS_AS(assemble_group_equation({{Kind::A, 1}}, ActionSpec::trivial, 1, {{}}),
                      BadPointError);
}

TEST_CASE("symplectic factor with an irregular seed verifies") {
    SystemRecord rec = assemble_group_equation(
        {{Kind::C, 2}}, ActionSpec::trivial, 1,
        {{{Rat(1), std::nullopt}, {Rat(2), std::nullopt}, {Rat(3), std::nullopt}}});
    auto bundle = check_system(rec);
    for (const auto& c : bundle.checks) {
        INFO(c.id << ": " << c.status << " " << c.evidence);
        REQUIRE(c.status == "pass");
    }
}

TEST_CASE("orthogonal factor with toric points verifies") {
    SystemRecord rec = assemble_group_equation(
        {{Kind::D, 3}}, ActionSpec::trivial, 1,
        {{{Rat(1), std::nullopt},
          {Rat(2), std::nullopt},
          {Rat(3), std::nullopt},
          {Rat(5), std::nullopt}}});
    auto bundle = check_system(rec);
    for (const auto& c : bundle.checks) {
        INFO(c.id << ": " << c.status << " " << c.evidence);
        REQUIRE(c.status == "pass");
    }
}
