#include <catch2/catch_amalgamated.hpp>

#include "diffgal/cyclotomic.hpp"
#include "diffgal/linalg.hpp"

using namespace diffgal;

TEST_CASE("rank, kernel, solve over Q") {
    RatMat m(3, 4);
    m << Rat(1), Rat(2), Rat(3), Rat(4),
         Rat(2), Rat(4), Rat(6), Rat(8),
         Rat(0), Rat(1), Rat(0), Rat(1);
    REQUIRE(exact_rank(m) == 2);
    RatMat k = exact_kernel(m);
    REQUIRE(k.cols() == 2);
    for (int c = 0; c < k.cols(); ++c) {
        RatVec prod = m * k.col(c);
        for (int i = 0; i < prod.size(); ++i) REQUIRE(prod(i) == 0);
    }

    RatVec b(3);
    b << Rat(10), Rat(20), Rat(2);
    auto x = exact_solve(m, b);
    REQUIRE(x.has_value());
    RatVec check = m * (*x);
    for (int i = 0; i < 3; ++i) REQUIRE(check(i) == b(i));

    RatVec bad(3);
    bad << Rat(1), Rat(0), Rat(0);
    REQUIRE(!exact_solve(m, bad).has_value());
}

TEST_CASE("inverse over a cyclotomic field") {
    auto f8 = CycloField::make(8);
    FieldElem s2 = sqrt_prime(2, f8);
    DMat<FieldElem> m(2, 2);
    m << FieldElem(1), s2, s2, FieldElem(3);
    auto inv = exact_inverse(m);
    REQUIRE(inv.has_value());
    DMat<FieldElem> id = m * (*inv);
    REQUIRE(id(0, 0) == FieldElem(1));
    REQUIRE(id(0, 1) == FieldElem(0));
    REQUIRE(id(1, 0) == FieldElem(0));
    REQUIRE(id(1, 1) == FieldElem(1));
}

TEST_CASE("charpoly via Faddeev-LeVerrier") {
    RatMat a(3, 3);
    a << Rat(0), Rat(1), Rat(0),
         Rat(0), Rat(0), Rat(1),
         Rat(1), Rat(0), Rat(0);
    auto p = charpoly(a);
    // companion of x^3 - 1
    REQUIRE(p == Poly<Rat>({Rat(-1), Rat(0), Rat(0), Rat(1)}));

    auto f8 = CycloField::make(8);
    FieldElem s2 = sqrt_prime(2, f8);
    DMat<FieldElem> d(2, 2);
    d << s2, FieldElem(0), FieldElem(0), -s2;
    auto q = charpoly(d);
    REQUIRE(q == Poly<FieldElem>({FieldElem(-2), FieldElem(0), FieldElem(1)}));
}

TEST_CASE("polynomial utilities") {
    Poly<Rat> p({Rat(1), Rat(2), Rat(1)});  // (x+1)^2
    Poly<Rat> q({Rat(1), Rat(1)});
    REQUIRE(poly_gcd(p, q) == q);
    auto eg = poly_ext_gcd(p, Poly<Rat>({Rat(-1), Rat(1)}));  // gcd with x-1
    REQUIRE(eg.g.degree() == 0);
    Poly<Rat> shifted = taylor_shift(p, Rat(1));  // (x+2)^2
    REQUIRE(shifted == Poly<Rat>({Rat(4), Rat(4), Rat(1)}));
    REQUIRE(eval(p, Rat(3)) == 16);
    REQUIRE(derivative(p) == Poly<Rat>({Rat(2), Rat(2)}));
}
