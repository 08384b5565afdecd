#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "diffgal/cyclotomic.hpp"

using namespace diffgal;

TEST_CASE("cyclotomic polynomials") {
    auto p1 = cyclotomic_polynomial(1);
    REQUIRE(p1 == Poly<Int>({Int(-1), Int(1)}));
    auto p8 = cyclotomic_polynomial(8);  // x^4 + 1
    REQUIRE(p8 == Poly<Int>({Int(1), Int(0), Int(0), Int(0), Int(1)}));
    auto p12 = cyclotomic_polynomial(12);  // x^4 - x^2 + 1
    REQUIRE(p12 == Poly<Int>({Int(1), Int(0), Int(-1), Int(0), Int(1)}));

    for (uint32_t m : {5u, 7u, 9u, 24u, 40u, 105u, 120u}) {
        auto pm = cyclotomic_polynomial(m);
        REQUIRE(pm.degree() == (int)euler_phi(m));
        REQUIRE(pm.lead() == Int(1));
        // divides x^m - 1 exactly
        Poly<Int> xm = Poly<Int>::monomial(m, Int(1)) - Poly<Int>::constant(Int(1));
        auto [q, r] = divrem(xm, pm);
        REQUIRE(r.is_zero());
    }
}

TEST_CASE("field element arithmetic basics") {
    auto f8 = CycloField::make(8);
    FieldElem z = FieldElem::zeta(f8, 1);

    // zeta_M * zeta_M^{M-1} = 1
    REQUIRE(z * FieldElem::zeta(f8, 7) == FieldElem::from_rat(f8, Rat(1)));

    auto f4 = CycloField::make(4);
    FieldElem i = FieldElem::zeta(f4, 1);
    // (1 + zeta_4)(1 - zeta_4) = 2
    FieldElem one = FieldElem::from_rat(f4, Rat(1));
    REQUIRE((one + i) * (one - i) == FieldElem::from_rat(f4, Rat(2)));

    // inverse of (zeta_8 + zeta_8^7) squared, times 2, is 1
    FieldElem s2 = FieldElem::zeta(f8, 1) + FieldElem::zeta(f8, 7);
    REQUIRE(FieldElem(2) * (s2 * s2).inverse() == FieldElem::from_rat(f8, Rat(1)));

    REQUIRE_THROWS_AS(FieldElem::from_rat(f8, Rat(0)).inverse(), DivisionByZeroError);
    REQUIRE_THROWS_AS(z + FieldElem::zeta(f4, 1), FieldMismatchError);
}

TEST_CASE("rational constants lift into fields") {
    auto f8 = CycloField::make(8);
    FieldElem a(Rat(3, 7));
    FieldElem z = FieldElem::zeta(f8, 1);
    FieldElem b = a * z + z;
    REQUIRE(b.field() == f8);
    REQUIRE(b == FieldElem(f8, {{1, Rat(10, 7)}}));
    REQUIRE(FieldElem(0).is_zero());
    REQUIRE(FieldElem(5).rational_value() == 5);
}

TEST_CASE("field axioms hold on random samples") {
    auto f = CycloField::make(24);
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> den(1, 5);
    auto rand_elem = [&] {
        std::vector<std::pair<int64_t, Rat>> raw;
        for (int t = 0; t < 4; ++t) raw.emplace_back(rng() % 24, Rat(coeff(rng), den(rng)));
        return FieldElem(f, std::move(raw));
    };
    for (int iter = 0; iter < 1000; ++iter) {
        FieldElem a = rand_elem(), b = rand_elem(), c = rand_elem();
        REQUIRE((a + b) * c == a * c + b * c);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a + b == b + a);
        if (!b.is_zero()) REQUIRE((a / b) * b == a);
    }
}

TEST_CASE("sqrt_prime squares back to p and respects conductors") {
    auto f8 = CycloField::make(8);
    FieldElem s2 = sqrt_prime(2, f8);
    REQUIRE(s2 == FieldElem::zeta(f8, 1) - FieldElem::zeta(f8, 3));
    REQUIRE(s2 * s2 == FieldElem::from_rat(f8, Rat(2)));

    REQUIRE_THROWS_AS(sqrt_prime(2, CycloField::make(3)), ConductorError);

    auto f40 = CycloField::make(40);
    FieldElem s5 = sqrt_prime(5, f40);
    REQUIRE(s5 * s5 == FieldElem::from_rat(f40, Rat(5)));

    for (uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u}) {
        auto fp = CycloField::make(sqrt_conductor(p));
        FieldElem s = sqrt_prime(p, fp);
        REQUIRE(s * s == FieldElem::from_rat(fp, Rat(p)));
    }
}

TEST_CASE("sqrt_prime in a compositum field") {
    auto f = CycloField::make(120);  // lcm(8, 12, 5)
    FieldElem a = sqrt_prime(2, f), b = sqrt_prime(3, f), c = sqrt_prime(5, f);
    REQUIRE(a * a == FieldElem::from_rat(f, Rat(2)));
    REQUIRE(b * b == FieldElem::from_rat(f, Rat(3)));
    REQUIRE(c * c == FieldElem::from_rat(f, Rat(5)));
    FieldElem s30 = a * b * c;
    REQUIRE(s30 * s30 == FieldElem::from_rat(f, Rat(30)));
}

TEST_CASE("q_linear_rank certificates") {
    auto f24 = CycloField::make(24);
    FieldElem one = FieldElem::from_rat(f24, Rat(1));
    FieldElem s2 = sqrt_prime(2, f24), s3 = sqrt_prime(3, f24);
    REQUIRE(q_linear_rank({one, s2, s3}) == 3);
    REQUIRE(q_linear_rank({FieldElem(1), FieldElem(Rat(1, 2))}) == 1);
    REQUIRE(q_linear_rank({s2, -s2}) == 1);

    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 50; ++iter) {
        std::vector<FieldElem> v{one, s2, s3, s2 * s3};
        std::shuffle(v.begin(), v.end(), rng);
        int k = (int)(rng() % v.size());
        v[k] = FieldElem(Rat((int)(rng() % 7) + 1, (int)(rng() % 5) + 1)) * v[k];
        REQUIRE(q_linear_rank(v) == 4);
    }
}

TEST_CASE("galois action and embedding") {
    auto f8 = CycloField::make(8);
    FieldElem s2 = sqrt_prime(2, f8);
    // zeta_8 -> zeta_8^3 sends sqrt2 to -sqrt2
    REQUIRE(s2.galois_power(3) == -s2);

    auto f24 = CycloField::make(24);
    FieldElem s2e = embed(s2, f24);
    REQUIRE(s2e * s2e == FieldElem::from_rat(f24, Rat(2)));
    REQUIRE(s2e == sqrt_prime(2, f24));
}

TEST_CASE("dense coefficient export") {
    auto f8 = CycloField::make(8);
    FieldElem s2 = sqrt_prime(2, f8);
    auto d = s2.dense_coeffs();
    REQUIRE(d.size() == 4);
    REQUIRE(d[0] == 0);
    REQUIRE(d[1] == 1);
    REQUIRE(d[2] == 0);
    REQUIRE(d[3] == -1);
}
