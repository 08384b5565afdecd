#include <catch2/catch_amalgamated.hpp>

#include "diffgal/root_system.hpp"

using namespace diffgal;

namespace {
Weight fw(int rank, int i) {
    Weight w = Weight::Zero(rank);
    w(i - 1) = 1;
    return w;
}
}  // namespace

TEST_CASE("cartan matrices match Bourbaki conventions") {
    for (Kind k : {Kind::A, Kind::B, Kind::C, Kind::D}) {
        int rank = (k == Kind::D) ? 4 : 3;
        auto rs = RootSystem::make(k, rank);
        for (int i = 0; i < rank; ++i) {
            REQUIRE(rs.cartan(i, i) == 2);
            for (int j = 0; j < rank; ++j) {
                if (i != j) {
                    REQUIRE(rs.cartan(i, j) <= 0);
                    REQUIRE(rs.cartan(i, j) >= -3);
                }
            }
        }
    }
    auto b3 = RootSystem::make(Kind::B, 3);
    REQUIRE(b3.cartan(2, 1) == -2);
    REQUIRE(b3.cartan(1, 2) == -1);
    auto c3 = RootSystem::make(Kind::C, 3);
    REQUIRE(c3.cartan(1, 2) == -2);
    REQUIRE(c3.cartan(2, 1) == -1);

    REQUIRE_THROWS_AS(RootSystem::make(Kind::D, 2), UnsupportedKindError);
    REQUIRE_THROWS_AS(RootSystem::make(Kind::E6, 5), UnsupportedKindError);
}

TEST_CASE("minuscule weight lists") {
    auto c3 = RootSystem::make(Kind::C, 3);
    auto mc = minuscule_weights(c3);
    REQUIRE(mc.size() == 1);
    REQUIRE(mc[0] == fw(3, 1));

    auto e7 = RootSystem::make(Kind::E7, 7);
    auto me = minuscule_weights(e7);
    REQUIRE(me.size() == 1);
    REQUIRE(me[0] == fw(7, 7));

    auto a1 = RootSystem::make(Kind::A, 1);
    auto ma = minuscule_weights(a1);
    REQUIRE(ma.size() == 1);
    REQUIRE(ma[0] == fw(1, 1));

    auto d4 = RootSystem::make(Kind::D, 4);
    REQUIRE(minuscule_weights(d4).size() == 3);
}

TEST_CASE("simple reflections") {
    auto a1 = RootSystem::make(Kind::A, 1);
    REQUIRE(reflect(a1, 1, fw(1, 1)) == -fw(1, 1));

    // A_l standard orbit: s_i moves w_i to w_{i+1}
    auto a4 = RootSystem::make(Kind::A, 4);
    auto orbit = weight_orbit(a4, fw(4, 1));
    REQUIRE(orbit.weights.size() == 5);
    for (int i = 1; i <= 4; ++i) {
        REQUIRE(reflect(a4, i, orbit.weights[i - 1]) == orbit.weights[i]);
    }

    // weights with zero i-th coordinate are fixed
    auto e6 = RootSystem::make(Kind::E6, 6);
    auto o6 = weight_orbit(e6, fw(6, 1));
    for (const Weight& w : o6.weights) {
        for (int i = 1; i <= 6; ++i) {
            if (w(i - 1) == 0) REQUIRE(reflect(e6, i, w) == w);
        }
    }
}

TEST_CASE("reflection is an involution on every orbit") {
    for (auto [kind, rank] : std::vector<std::pair<Kind, int>>{
             {Kind::A, 5}, {Kind::B, 4}, {Kind::C, 4}, {Kind::D, 5}, {Kind::E6, 6}}) {
        auto rs = RootSystem::make(kind, rank);
        for (const Weight& hw : minuscule_weights(rs)) {
            auto orbit = weight_orbit(rs, hw);
            for (const Weight& w : orbit.weights) {
                for (int i = 1; i <= rank; ++i) {
                    REQUIRE(reflect(rs, i, reflect(rs, i, w)) == w);
                }
            }
        }
    }
}

TEST_CASE("orbit sizes equal the minuscule dimensions") {
    for (int l = 1; l <= 8; ++l) {
        auto rs = RootSystem::make(Kind::A, l);
        REQUIRE(weight_orbit(rs, fw(l, 1)).weights.size() == (size_t)l + 1);
    }
    for (int l = 2; l <= 8; ++l) {
        auto rs = RootSystem::make(Kind::C, l);
        REQUIRE(weight_orbit(rs, fw(l, 1)).weights.size() == (size_t)2 * l);
    }
    for (int l = 3; l <= 8; ++l) {
        auto rs = RootSystem::make(Kind::D, l);
        REQUIRE(weight_orbit(rs, fw(l, 1)).weights.size() == (size_t)2 * l);
    }
    for (int l = 2; l <= 7; ++l) {
        auto rs = RootSystem::make(Kind::B, l);
        REQUIRE(weight_orbit(rs, fw(l, l)).weights.size() == (size_t)1 << l);
    }
    REQUIRE(weight_orbit(RootSystem::make(Kind::B, 3), fw(3, 3)).weights.size() == 8);
    REQUIRE(weight_orbit(RootSystem::make(Kind::E6, 6), fw(6, 1)).weights.size() == 27);
    REQUIRE(weight_orbit(RootSystem::make(Kind::E6, 6), fw(6, 6)).weights.size() == 27);
    REQUIRE(weight_orbit(RootSystem::make(Kind::E7, 7), fw(7, 7)).weights.size() == 56);

    // A_l has all fundamental weights minuscule
    auto a4 = RootSystem::make(Kind::A, 4);
    REQUIRE(weight_orbit(a4, fw(4, 2)).weights.size() == 10);
}

TEST_CASE("minuscule orbits have coordinates in {-1,0,1}") {
    for (auto [kind, rank] : std::vector<std::pair<Kind, int>>{
             {Kind::A, 6}, {Kind::B, 5}, {Kind::C, 5}, {Kind::D, 6}, {Kind::E6, 6}, {Kind::E7, 7}}) {
        auto rs = RootSystem::make(kind, rank);
        for (const Weight& hw : minuscule_weights(rs)) {
            for (const Weight& w : weight_orbit(rs, hw).weights) {
                for (int i = 0; i < rank; ++i) {
                    REQUIRE(w(i) >= -1);
                    REQUIRE(w(i) <= 1);
                }
            }
        }
    }
}

TEST_CASE("non-minuscule highest weight is rejected") {
    auto b3 = RootSystem::make(Kind::B, 3);
    REQUIRE_THROWS_AS(weight_orbit(b3, fw(3, 1)), OrbitGuardError);
}
