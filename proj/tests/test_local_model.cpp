#include <catch2/catch_amalgamated.hpp>

#include "diffgal/local_model.hpp"

using namespace diffgal;

namespace {
FMat fzero(int n) { return FMat::Constant(n, n, FieldElem(0)); }
}  // namespace

TEST_CASE("weyl lift of the sl2 reflection is the order-4 rotation") {
    auto f4 = CycloField::make(4);
    auto w = weyl_lift(Kind::A, 1, {1}, f4);
    REQUIRE(w.g(0, 0) == FieldElem(0));
    REQUIRE(w.g(0, 1) == FieldElem(1));
    REQUIRE(w.g(1, 0) == FieldElem(-1));
    REQUIRE(w.g(1, 1) == FieldElem(0));
    REQUIRE(w.order == 4);
    REQUIRE(w.dphi(0, 0) == FieldElem(-1));
    REQUIRE(w.dphi_order == 2);
}

TEST_CASE("weyl lift of the identity word") {
    auto f4 = CycloField::make(4);
    auto w = weyl_lift(Kind::A, 2, {}, f4);
    REQUIRE(w.order == 1);
    REQUIRE(w.dphi_order == 1);
    auto h = hilbert90_eta(w);
    REQUIRE(h.eta == PuiseuxMatrix::identity(3, 1));
}

TEST_CASE("weyl lift of the sl3 Coxeter word") {
    auto f12 = CycloField::make(12);
    auto w = weyl_lift(Kind::A, 2, {1, 2}, f12);
    REQUIRE(6 % w.order == 0);
    REQUIRE(w.dphi_order == 3);
    // signed permutation with a single 3-cycle on coordinates
    int nonzero = 0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (!w.g(i, j).is_zero()) ++nonzero;
        }
    }
    REQUIRE(nonzero == 3);
}

TEST_CASE("hilbert90 eta reproduces the printed sl2 element") {
    auto f4 = CycloField::make(4);
    auto w = weyl_lift(Kind::A, 1, {1}, f4);
    auto h = hilbert90_eta(w);

    FieldElem i = FieldElem::zeta(f4, 1);
    FieldElem half(Rat(1, 2));
    // eta = 1/2 [[t^{1/4} + t^{-1/4}, i(-t^{1/4} + t^{-1/4})],
    //            [i(t^{1/4} - t^{-1/4}), t^{1/4} + t^{-1/4}]]
    PuiseuxMatrix paper = PuiseuxMatrix::zero(2, 2, 4);
    FMat cp = fzero(2);
    cp(0, 0) = half;
    cp(0, 1) = -i * half;
    cp(1, 0) = i * half;
    cp(1, 1) = half;
    paper.insert_term(1, cp);
    FMat cm = fzero(2);
    cm(0, 0) = half;
    cm(0, 1) = i * half;
    cm(1, 0) = -i * half;
    cm(1, 1) = half;
    paper.insert_term(-1, cm);

    REQUIRE(h.eta == paper);

    // gamma'-identity, re-checked here on the paper form
    PuiseuxMatrix g_const = PuiseuxMatrix::zero(2, 2, 1);
    g_const.insert_term(0, w.g);
    REQUIRE(paper.galois_twist(f4) == paper * g_const);
}

TEST_CASE("hilbert90 for g = -1 gives paired half-integer exponents") {
    auto f4 = CycloField::make(4);
    auto w = weyl_lift(Kind::A, 1, {1, 1}, f4);  // the lift squares to -I
    REQUIRE(w.g(0, 0) == FieldElem(-1));
    REQUIRE(w.order == 2);
    auto h = hilbert90_eta(w);
    // determinant-one representative of t^{1/2} I: diag(t^{-1/2}, t^{1/2})
    REQUIRE(h.eta.coeff_at(Rat(-1, 2))(0, 0) == FieldElem(1));
    REQUIRE(h.eta.coeff_at(Rat(1, 2))(1, 1) == FieldElem(1));
    PuiseuxMatrix g_const = PuiseuxMatrix::zero(2, 2, 1);
    g_const.insert_term(0, w.g);
    REQUIRE(h.eta.galois_twist(f4) == h.eta * g_const);
}

TEST_CASE("toric equation for the sl2 witness") {
    auto f4 = CycloField::make(4);
    auto w = weyl_lift(Kind::A, 1, {1}, f4);
    auto a = toric_equation(w);
    // single term z^{-5/2} diag(1, -1)
    REQUIRE(a.terms.size() == 1);
    FMat c = a.coeff_at(Rat(-5, 2));
    REQUIRE(c(0, 0) == FieldElem(1));
    REQUIRE(c(1, 1) == FieldElem(-1));
}

TEST_CASE("toric equation for a trivial witness") {
    auto f4 = CycloField::make(4);
    auto w = weyl_lift(Kind::A, 1, {}, f4);
    auto a = toric_equation(w);
    REQUIRE(a.exponents_integral());
    // rank-1 torus, m = 1: the basis vector h at z^{-2}
    REQUIRE(a.terms.size() == 1);
    REQUIRE(a.coeff_at(Rat(-2))(0, 0) == FieldElem(1));
    REQUIRE(a.coeff_at(Rat(-2))(1, 1) == FieldElem(-1));

    auto model = toric_model(w);
    REQUIRE(model.abar == a);
}

TEST_CASE("toric model of the sl2 witness") {
    auto f4 = CycloField::make(4);
    auto w = weyl_lift(Kind::A, 1, {1}, f4);
    auto model = toric_model(w);
    REQUIRE(model.abar.exponents_integral());
    for (auto& [e, c] : model.seed.terms) {
        REQUIRE(algebra_member(c, model.seed.tag));
    }
    // ungluing recovers the torus equation
    auto h = hilbert90_eta(w);
    auto atilde = toric_equation(w);
    PuiseuxMatrix recovered = h.eta_inv * (model.abar - h.eta_logderiv) * h.eta;
    REQUIRE(recovered == atilde);
}

TEST_CASE("paper Abar reproduced from the paper eta and Atilde") {
    auto f4 = CycloField::make(4);
    auto w = weyl_lift(Kind::A, 1, {1}, f4);
    FieldElem i = FieldElem::zeta(f4, 1);
    FieldElem half(Rat(1, 2)), quarter(Rat(1, 4));

    PuiseuxMatrix eta = PuiseuxMatrix::zero(2, 2, 4);
    {
        FMat cp = fzero(2);
        cp(0, 0) = half;
        cp(0, 1) = -i * half;
        cp(1, 0) = i * half;
        cp(1, 1) = half;
        eta.insert_term(1, cp);
        FMat cm = fzero(2);
        cm(0, 0) = half;
        cm(0, 1) = i * half;
        cm(1, 0) = -i * half;
        cm(1, 1) = half;
        eta.insert_term(-1, cm);
    }
    PuiseuxMatrix eta_inv = puiseux_inverse_2x2(eta);

    // Atilde = diag(-1/(2 t^{3/2}), 1/(2 t^{3/2}))
    PuiseuxMatrix atilde = PuiseuxMatrix::zero(2, 2, 2);
    {
        FMat c = fzero(2);
        c(0, 0) = -half;
        c(1, 1) = half;
        atilde.insert_term(-3, c);
    }

    auto model = toric_model_from(w, eta, eta_inv, atilde);

    // Abar = [[-(t+1)/4t^2, -i(2t-1)/4t^2], [i/4t^2, (t+1)/4t^2]]
    PuiseuxMatrix expect = PuiseuxMatrix::zero(2, 2, 1);
    FMat c2 = fzero(2);  // t^{-2} coefficient
    c2(0, 0) = -quarter;
    c2(0, 1) = i * quarter;
    c2(1, 0) = i * quarter;
    c2(1, 1) = quarter;
    expect.insert_term(-2, c2);
    FMat c1 = fzero(2);  // t^{-1} coefficient
    c1(0, 0) = -quarter;
    c1(0, 1) = -i * half;
    c1(1, 1) = quarter;
    expect.insert_term(-1, c1);

    REQUIRE(model.abar == expect);
    REQUIRE(model.seed.terms.size() == 2);
}

TEST_CASE("toric models for sl3 and so6 witnesses") {
    auto f12 = CycloField::make(12);
    auto w = weyl_lift(Kind::A, 2, {1, 2}, f12);
    auto model = toric_model(w);
    REQUIRE(!model.seed.terms.empty());
    auto h = hilbert90_eta(w);
    auto atilde = toric_equation(w);
    REQUIRE(h.eta_inv * (model.abar - h.eta_logderiv) * h.eta == atilde);

    auto f_so = CycloField::make(witness_field_order(Kind::D, 3, {1, 2, 3}));
    auto wd = weyl_lift(Kind::D, 3, {1, 2, 3}, f_so);
    auto md = toric_model(wd);
    REQUIRE(!md.seed.terms.empty());
    for (auto& [e, c] : md.seed.terms) REQUIRE(algebra_member(c, md.seed.tag));
}
