#pragma once

#include <map>
#include <optional>

#include "diffgal/lie_algebra.hpp"

namespace diffgal {

// Matrix of truncated Laurent-Puiseux series in t^{1/ram}: terms maps the
// exponent numerator e to the coefficient of t^{e/ram}.  trunc, when present,
// is the order from which terms are unknown (the value is exact modulo
// O(t^trunc)); absent trunc means the series is an exact Laurent-Puiseux
// polynomial.
struct PuiseuxMatrix {
    int rows = 0, cols = 0;
    int ram = 1;
    std::map<int64_t, FMat> terms;
    std::optional<Rat> trunc;

    static PuiseuxMatrix zero(int rows, int cols, int ram = 1);
    static PuiseuxMatrix identity(int n, int ram = 1);
    static PuiseuxMatrix from_term(const Rat& exponent, const FMat& coeff);
    static PuiseuxMatrix from_laurent(const std::map<int, FMat>& laurent);

    void insert_term(int64_t e, const FMat& coeff);
    PuiseuxMatrix with_ram(int new_ram) const;  // new_ram must be a multiple
    void drop_zero_terms();

    std::optional<Rat> min_exponent() const;  // nullopt when zero
    FMat coeff_at(const Rat& exponent) const;
    bool is_zero() const;
    bool exponents_integral() const;
    std::map<int, FMat> to_laurent() const;  // requires integral exponents
    PuiseuxMatrix truncated(const Rat& keep_up_to) const;  // drops exponents > keep_up_to

    PuiseuxMatrix derivative() const;  // d/dt
    // Applies t^{1/ram} -> zeta_ram t^{1/ram} to all entries; zeta_ram is
    // taken inside f (ram must divide the field order).
    PuiseuxMatrix galois_twist(const std::shared_ptr<const CycloField>& f) const;
    PuiseuxMatrix transpose() const;
};

PuiseuxMatrix operator+(const PuiseuxMatrix& a, const PuiseuxMatrix& b);
PuiseuxMatrix operator-(const PuiseuxMatrix& a, const PuiseuxMatrix& b);
PuiseuxMatrix operator*(const PuiseuxMatrix& a, const PuiseuxMatrix& b);
PuiseuxMatrix operator*(const FieldElem& s, const PuiseuxMatrix& a);
bool operator==(const PuiseuxMatrix& a, const PuiseuxMatrix& b);

// Constant-coefficient conjugation p * a * p_inv.
PuiseuxMatrix conjugate(const FMat& p, const PuiseuxMatrix& a, const FMat& p_inv);

// Inverse of a 2x2 Laurent-Puiseux polynomial matrix whose determinant is a
// single term (a unit).  Used for replaying printed local models.
PuiseuxMatrix puiseux_inverse_2x2(const PuiseuxMatrix& a);

// Newton-polygon slope of an A/C irregular seed via the diagonal shearing
// g = diag(1, t^{1/n}, ..., t^{(n-1)/n}).  For a regular-singular seed (pole
// order <= 1) reports slope 0 and irregular = false.
struct SlopeResult {
    Rat slope;
    bool irregular = false;
    // The semisimple leading coefficient exposed by the shearing (empty for
    // regular-singular seeds), and its verified characteristic polynomial
    // lambda^n - 1.
    FMat sheared_leading;
};

SlopeResult unique_slope(const LaurentSeed& seed);

}  // namespace diffgal
