#include <catch2/catch_amalgamated.hpp>

#include "diffgal/lie_algebra.hpp"

using namespace diffgal;

TEST_CASE("algebra bases have the right dimensions and satisfy the form identity") {
    for (auto tag : std::vector<AlgebraTag>{{AlgebraTag::sl, 3},
                                            {AlgebraTag::sl, 5},
                                            {AlgebraTag::sp, 4},
                                            {AlgebraTag::sp, 8},
                                            {AlgebraTag::so, 6},
                                            {AlgebraTag::so, 10}}) {
        auto basis = algebra_basis(tag);
        REQUIRE((int)basis.size() == tag.dim());
        for (const FMat& b : basis) REQUIRE(algebra_member(b, tag));
        for (const FMat& h : cartan_basis(tag)) REQUIRE(algebra_member(h, tag));
        for (const FMat& v : positive_root_vectors(tag)) REQUIRE(algebra_member(v, tag));
    }
}

TEST_CASE("ad kernel dims") {
    auto f8 = CycloField::make(8);

    // zero matrix centralizes everything
    LieMatrix zero{FMat::Constant(3, 3, FieldElem(0)), {AlgebraTag::sl, 3}};
    REQUIRE(ad_kernel_dim(zero) == 8);

    // regular semisimple h in sl2: centralizer is the torus
    FMat h = FMat::Constant(2, 2, FieldElem(0));
    h(0, 0) = FieldElem(1);
    h(1, 1) = FieldElem(-1);
    REQUIRE(ad_kernel_dim({h, {AlgebraTag::sl, 2}}) == 1);
}

TEST_CASE("principal nilpotents") {
    // sl2: e with ad-kernel dim 1
    LieMatrix u2 = principal_nilpotent(Kind::A, 1);
    REQUIRE(u2.mat(0, 1) == FieldElem(1));
    REQUIRE(u2.mat(1, 0) == FieldElem(0));
    REQUIRE(ad_kernel_dim(u2) == 1);

    // sl3: strictly upper all-ones
    LieMatrix u3 = principal_nilpotent(Kind::A, 2);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            REQUIRE(u3.mat(i, j) == FieldElem(j > i ? 1 : 0));
        }
    }
    REQUIRE(ad_kernel_dim(u3) == 2);

    // sp4: sum of the 4 positive-root vectors
    REQUIRE(positive_root_vectors({AlgebraTag::sp, 4}).size() == 4);
    REQUIRE(ad_kernel_dim(principal_nilpotent(Kind::C, 2)) == 2);

    // sl4 principal nilpotent has ad-kernel 3
    REQUIRE(ad_kernel_dim(principal_nilpotent(Kind::A, 3)) == 3);

    for (int l = 1; l <= 4; ++l) REQUIRE(ad_kernel_dim(principal_nilpotent(Kind::A, l)) == l);
    for (int l = 2; l <= 4; ++l) REQUIRE(ad_kernel_dim(principal_nilpotent(Kind::C, l)) == l);
    for (int l = 3; l <= 4; ++l) REQUIRE(ad_kernel_dim(principal_nilpotent(Kind::D, l)) == l);
}

TEST_CASE("generic torus seeds") {
    auto f8 = CycloField::make(8);
    auto seed = generic_torus_seed(Kind::A, 1, f8);
    FieldElem s2 = sqrt_prime(2, f8);
    REQUIRE(seed.a1.mat(0, 0) == s2);
    REQUIRE(seed.a1.mat(1, 1) == -s2);
    REQUIRE(seed.certificate_rank == 2);

    auto f24 = CycloField::make(24);
    auto sp4 = generic_torus_seed(Kind::C, 2, f24);
    FieldElem r2 = sqrt_prime(2, f24), r3 = sqrt_prime(3, f24);
    REQUIRE(sp4.a1.mat(0, 0) == r2);
    REQUIRE(sp4.a1.mat(1, 1) == r3);
    REQUIRE(sp4.a1.mat(2, 2) == -r3);
    REQUIRE(sp4.a1.mat(3, 3) == -r2);
    REQUIRE(algebra_member(sp4.a1.mat, sp4.a1.tag));
    REQUIRE(sp4.certificate_rank == 3);

    REQUIRE(generic_torus_seed(Kind::A, 2, f24).certificate_rank == 3);
    REQUIRE_THROWS_AS(generic_torus_seed(Kind::A, 3, f24), ConductorError);

    // torus centralizer is the Cartan subalgebra
    for (auto [kind, l] : std::vector<std::pair<Kind, int>>{{Kind::A, 2}, {Kind::C, 2}}) {
        auto f = CycloField::make(torus_field_order(l));
        auto s = generic_torus_seed(kind, l, f);
        REQUIRE(ad_kernel_dim(s.a1) == l);
    }
    {
        auto f = CycloField::make(torus_field_order(3));
        auto s = generic_torus_seed(Kind::D, 3, f);
        REQUIRE(ad_kernel_dim(s.a1) == 3);
        REQUIRE(s.certificate_rank == 4);
    }
}

TEST_CASE("irregular seeds have char poly lambda^n - 1") {
    // A1: A_{0,1} + A_{0,2} = [[0,1],[1,0]]
    auto a1 = irregular_seed(Kind::A, 1);
    FMat sum = a1.terms.at(-2) + a1.terms.at(-1);
    REQUIRE(sum(0, 1) == FieldElem(1));
    REQUIRE(sum(1, 0) == FieldElem(1));
    REQUIRE(sum(0, 0) == FieldElem(0));

    for (int l = 1; l <= 6; ++l) REQUIRE_NOTHROW(irregular_seed(Kind::A, l));
    for (int l = 2; l <= 6; ++l) {
        auto seed = irregular_seed(Kind::C, l);
        REQUIRE(algebra_member(seed.terms.at(-2), seed.tag));
        REQUIRE(algebra_member(seed.terms.at(-1), seed.tag));
    }
    REQUIRE_THROWS_AS(irregular_seed(Kind::D, 4), UnsupportedKindError);
}
