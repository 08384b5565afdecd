#include <catch2/catch_amalgamated.hpp>
#include <numeric>
#include <random>

#include "diffgal/weyl_perm.hpp"

using namespace diffgal;

namespace {
Weight fw(int rank, int i) {
    Weight w = Weight::Zero(rank);
    w(i - 1) = 1;
    return w;
}

std::vector<int> iota_word(int l) {
    std::vector<int> w(l);
    std::iota(w.begin(), w.end(), 1);
    return w;
}

uint64_t factorial(int n) {
    uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}
}  // namespace

TEST_CASE("reflection permutations are involutions") {
    for (auto [kind, rank] : std::vector<std::pair<Kind, int>>{
             {Kind::A, 4}, {Kind::B, 4}, {Kind::C, 4}, {Kind::D, 4}, {Kind::E6, 6}}) {
        auto rs = RootSystem::make(kind, rank);
        for (const Weight& hw : minuscule_weights(rs)) {
            auto orbit = weight_orbit(rs, hw);
            for (const Perm& p : reflection_perms(rs, orbit)) REQUIRE(perm_is_involution(p));
        }
    }

    // A1: the single reflection swaps the two weights
    auto a1 = RootSystem::make(Kind::A, 1);
    auto o1 = weight_orbit(a1, fw(1, 1));
    auto g1 = reflection_perms(a1, o1);
    REQUIRE(g1.size() == 1);
    REQUIRE(g1[0].img == std::vector<uint16_t>{1, 0});
}

TEST_CASE("A_l reflections are adjacent transpositions in BFS labels") {
    auto rs = RootSystem::make(Kind::A, 5);
    auto orbit = weight_orbit(rs, fw(5, 1));
    auto gens = reflection_perms(rs, orbit);
    for (int i = 0; i < 5; ++i) {
        CycleType ct = cycle_type(gens[i]);
        REQUIRE(ct == CycleType{2, 1, 1, 1, 1});
        REQUIRE(gens[i].img[i] == i + 1);
    }
}

TEST_CASE("D_l last reflection is a double transposition") {
    auto rs = RootSystem::make(Kind::D, 5);
    auto orbit = weight_orbit(rs, fw(5, 1));
    auto gens = reflection_perms(rs, orbit);
    REQUIRE(cycle_type(gens[4]) == CycleType{2, 2, 1, 1, 1, 1, 1, 1});
}

TEST_CASE("named word products have the paper cycle types") {
    // empty word
    auto a2 = RootSystem::make(Kind::A, 2);
    auto oa2 = weight_orbit(a2, fw(2, 1));
    auto ga2 = reflection_perms(a2, oa2);
    REQUIRE(perm_is_identity(word_perm(ga2, {})));

    for (int l = 1; l <= 8; ++l) {
        auto rs = RootSystem::make(Kind::A, l);
        auto orbit = weight_orbit(rs, fw(l, 1));
        auto gens = reflection_perms(rs, orbit);
        REQUIRE(cycle_type(word_perm(gens, iota_word(l))) == CycleType{l + 1});
    }
    for (int l = 2; l <= 8; ++l) {
        auto rs = RootSystem::make(Kind::C, l);
        auto orbit = weight_orbit(rs, fw(l, 1));
        auto gens = reflection_perms(rs, orbit);
        REQUIRE(cycle_type(word_perm(gens, iota_word(l))) == CycleType{2 * l});
        REQUIRE(cycle_type(word_perm(gens, iota_word(l - 1))) == CycleType{l, l});
    }
    for (int l = 3; l <= 8; ++l) {
        auto rs = RootSystem::make(Kind::D, l);
        auto orbit = weight_orbit(rs, fw(l, 1));
        auto gens = reflection_perms(rs, orbit);
        REQUIRE(cycle_type(word_perm(gens, iota_word(l - 1))) == CycleType{l, l});
        REQUIRE(cycle_type(word_perm(gens, iota_word(l))) == CycleType{2 * l - 2, 2});
    }
}

TEST_CASE("enumeration of small Weyl groups") {
    auto a2 = RootSystem::make(Kind::A, 2);
    auto orbit = weight_orbit(a2, fw(2, 1));
    auto gens = reflection_perms(a2, orbit);
    auto res = enumerate_cycle_types(gens);
    REQUIRE(res.group_order == 6);
    REQUIRE(res.types.size() == 3);  // [1,1,1], [2,1], [3]

    std::set<CycleType> seen;
    for (auto& t : res.types) {
        seen.insert(t.parts);
        // witness words replay to the claimed type
        REQUIRE(cycle_type(word_perm(gens, t.witness_word)) == t.parts);
    }
    REQUIRE(seen.count({1, 1, 1}) == 1);
    REQUIRE(seen.count({2, 1}) == 1);
    REQUIRE(seen.count({3}) == 1);
}

TEST_CASE("group orders match Weyl group formulas") {
    for (int l = 1; l <= 6; ++l) {
        auto rs = RootSystem::make(Kind::A, l);
        auto o = weight_orbit(rs, fw(l, 1));
        REQUIRE(enumerate_cycle_types(reflection_perms(rs, o)).group_order == factorial(l + 1));
    }
    for (int l = 2; l <= 6; ++l) {
        auto rs = RootSystem::make(Kind::C, l);
        auto o = weight_orbit(rs, fw(l, 1));
        REQUIRE(enumerate_cycle_types(reflection_perms(rs, o)).group_order ==
                (factorial(l) << l));
    }
    for (int l = 3; l <= 6; ++l) {
        auto rs = RootSystem::make(Kind::D, l);
        auto o = weight_orbit(rs, fw(l, 1));
        REQUIRE(enumerate_cycle_types(reflection_perms(rs, o)).group_order ==
                (factorial(l) << (l - 1)));
    }
    for (int l = 2; l <= 5; ++l) {
        auto rs = RootSystem::make(Kind::B, l);
        auto o = weight_orbit(rs, fw(l, l));
        REQUIRE(enumerate_cycle_types(reflection_perms(rs, o)).group_order ==
                (factorial(l) << l));
    }
}

TEST_CASE("enumeration cap raises a resource error") {
    auto rs = RootSystem::make(Kind::C, 6);
    auto o = weight_orbit(rs, fw(6, 1));
    EnumLimits tiny;
    tiny.max_bytes = 4096;
    REQUIRE_THROWS_AS(enumerate_cycle_types(reflection_perms(rs, o), tiny), EnumCapError);
}

TEST_CASE("invariant sums") {
    REQUIRE(invariant_sums({4, 2}) == std::vector<int>{0, 2, 4, 6});
    REQUIRE(invariant_sums({6}) == std::vector<int>{0, 6});
    REQUIRE(invariant_sums({3, 2, 1}) == std::vector<int>{0, 1, 2, 3, 4, 5, 6});

    // brute-force oracle on random multisets
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 200; ++iter) {
        CycleType ct;
        int parts = 1 + (int)(rng() % 5);
        for (int i = 0; i < parts; ++i) ct.push_back(1 + (int)(rng() % 6));
        std::sort(ct.rbegin(), ct.rend());
        std::set<int> expected;
        for (uint32_t mask = 0; mask < (1u << parts); ++mask) {
            int s = 0;
            for (int b = 0; b < parts; ++b) {
                if (mask >> b & 1) s += ct[b];
            }
            expected.insert(s);
        }
        auto got = invariant_sums(ct);
        REQUIRE(std::vector<int>(expected.begin(), expected.end()) == got);
    }
}

TEST_CASE("strict transitivity of the paper m=6 examples") {
    auto [ok1, c1] = is_strictly_transitive({{6}}, 6);
    REQUIRE(ok1);
    REQUIRE(replay_certificate(c1, {{6}}, 6));

    auto [ok2, c2] = is_strictly_transitive({{3, 3}, {4, 2}}, 6);
    REQUIRE(ok2);
    REQUIRE(replay_certificate(c2, {{3, 3}, {4, 2}}, 6));

    auto [ok3, c3] = is_strictly_transitive({{3, 3}, {3, 2, 1}}, 6);
    REQUIRE(!ok3);
    REQUIRE(c3.blocking_i == 3);
    REQUIRE(replay_certificate(c3, {{3, 3}, {3, 2, 1}}, 6));
}

TEST_CASE("strict transitivity is monotone under adding types") {
    std::mt19937_64 rng(1234);
    int m = 12;
    // random partitions of m
    auto random_ct = [&]() {
        CycleType ct;
        int left = m;
        while (left > 0) {
            int p = 1 + (int)(rng() % left);
            ct.push_back(p);
            left -= p;
        }
        std::sort(ct.rbegin(), ct.rend());
        return ct;
    };
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<CycleType> base;
        int n = 1 + (int)(rng() % 3);
        for (int i = 0; i < n; ++i) base.push_back(random_ct());
        bool before = is_strictly_transitive(base, m).first;
        base.push_back(random_ct());
        bool after = is_strictly_transitive(base, m).first;
        if (before) REQUIRE(after);
    }
}

TEST_CASE("A_l singleton full-cycle class is strictly transitive") {
    for (int l = 2; l <= 5; ++l) {
        auto res = find_strictly_transitive(Kind::A, l, fw(l, 1), 1);
        REQUIRE(res.exists);
        bool found = false;
        for (auto& s : res.minimal_sets) {
            if (s.size() == 1 && res.enumeration.types[s[0]].parts == CycleType{l + 1}) found = true;
        }
        REQUIRE(found);
    }
}

TEST_CASE("B_l spin table: existence for 2,3,5 and non-existence for 4") {
    for (int l : {2, 3, 5}) {
        auto res = find_strictly_transitive(Kind::B, l, fw(l, l), 3);
        REQUIRE(res.exists);
        REQUIRE(!res.minimal_sets.empty());
    }
    auto res4 = find_strictly_transitive(Kind::B, 4, fw(4, 4), 0);
    REQUIRE(!res4.exists);
    REQUIRE(res4.minimal_sets.empty());
    REQUIRE(!res4.full_set_certificate.ok);
    // full-set failure replays
    std::vector<CycleType> cts;
    for (auto& t : res4.enumeration.types) cts.push_back(t.parts);
    REQUIRE(replay_certificate(res4.full_set_certificate, cts, res4.orbit_size));
}

TEST_CASE("E6 enumeration matches the paper") {
    auto res = find_strictly_transitive(Kind::E6, 6, fw(6, 1), 2);
    REQUIRE(res.orbit_size == 27);
    REQUIRE(res.enumeration.group_order == 51840);
    int t1 = -1, t2 = -1;
    for (size_t i = 0; i < res.enumeration.types.size(); ++i) {
        if (res.enumeration.types[i].parts == CycleType{12, 12, 3}) t1 = (int)i;
        if (res.enumeration.types[i].parts == CycleType{9, 9, 9}) t2 = (int)i;
    }
    REQUIRE(t1 >= 0);
    REQUIRE(t2 >= 0);
    auto [ok, cert] = is_strictly_transitive(
        {res.enumeration.types[t1].parts, res.enumeration.types[t2].parts}, 27);
    REQUIRE(ok);
}

TEST_CASE("sampled representatives of strictly transitive sets generate transitively") {
    std::mt19937_64 rng(20250810);
    auto rs = RootSystem::make(Kind::B, 3);
    auto orbit = weight_orbit(rs, fw(3, 3));
    auto gens = reflection_perms(rs, orbit);
    auto res = find_strictly_transitive(Kind::B, 3, fw(3, 3), 3);
    REQUIRE(res.exists);
    REQUIRE(!res.minimal_sets.empty());
    int m = res.orbit_size;

    auto random_perm = [&]() {
        Perm p = perm_identity(m);
        for (int i = m - 1; i > 0; --i) std::swap(p.img[i], p.img[rng() % (i + 1)]);
        return p;
    };
    auto inverse = [&](const Perm& p) {
        Perm q = perm_identity(m);
        for (int i = 0; i < m; ++i) q.img[p.img[i]] = (uint16_t)i;
        return q;
    };
    for (int sample = 0; sample < 100; ++sample) {
        const auto& set = res.minimal_sets[sample % res.minimal_sets.size()];
        std::vector<Perm> reps;
        for (int t : set) {
            Perm w = word_perm(gens, res.enumeration.types[t].witness_word);
            Perm c = random_perm();
            reps.push_back(perm_compose(perm_compose(inverse(c), w), c));
            REQUIRE(cycle_type(reps.back()) == res.enumeration.types[t].parts);
        }
        // orbit of point 0 under the generated subgroup must be everything
        std::vector<bool> seen(m, false);
        std::vector<int> stack{0};
        seen[0] = true;
        int count = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (const Perm& r : reps) {
                for (int y : {(int)r.img[x], (int)inverse(r).img[x]}) {
                    if (!seen[y]) {
                        seen[y] = true;
                        stack.push_back(y);
                        ++count;
                    }
                }
            }
        }
        REQUIRE(count == m);
    }
}
