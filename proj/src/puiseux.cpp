#include "diffgal/puiseux.hpp"

#include <numeric>

namespace diffgal {

namespace {
bool mat_is_zero(const FMat& m) {
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_zero()) return false;
        }
    }
    return true;
}
}  // namespace

PuiseuxMatrix PuiseuxMatrix::zero(int rows, int cols, int ram) {
    PuiseuxMatrix p;
    p.rows = rows;
    p.cols = cols;
    p.ram = ram;
    return p;
}

PuiseuxMatrix PuiseuxMatrix::identity(int n, int ram) {
    PuiseuxMatrix p = zero(n, n, ram);
    FMat id = FMat::Constant(n, n, FieldElem(0));
    for (int i = 0; i < n; ++i) id(i, i) = FieldElem(1);
    p.terms.emplace(0, std::move(id));
    return p;
}

PuiseuxMatrix PuiseuxMatrix::from_term(const Rat& exponent, const FMat& coeff) {
    Int den = rat_den(exponent);
    if (den > 1u << 20) throw Error("PuiseuxMatrix: ramification too large");
    PuiseuxMatrix p = zero((int)coeff.rows(), (int)coeff.cols(), (int)den);
    p.insert_term((int64_t)Int(rat_num(exponent)), coeff);
    return p;
}

PuiseuxMatrix PuiseuxMatrix::from_laurent(const std::map<int, FMat>& laurent) {
    if (laurent.empty()) throw Error("PuiseuxMatrix: empty Laurent data");
    PuiseuxMatrix p = zero((int)laurent.begin()->second.rows(),
                           (int)laurent.begin()->second.cols(), 1);
    for (auto& [e, c] : laurent) p.insert_term(e, c);
    return p;
}

void PuiseuxMatrix::insert_term(int64_t e, const FMat& coeff) {
    if (coeff.rows() != rows || coeff.cols() != cols)
        throw Error("PuiseuxMatrix: coefficient shape mismatch");
    auto [it, fresh] = terms.emplace(e, coeff);
    if (!fresh) it->second += coeff;
    if (mat_is_zero(it->second)) terms.erase(it);
}

PuiseuxMatrix PuiseuxMatrix::with_ram(int new_ram) const {
    if (new_ram % ram != 0) throw Error("PuiseuxMatrix: ramification not a multiple");
    int f = new_ram / ram;
    PuiseuxMatrix p = zero(rows, cols, new_ram);
    p.trunc = trunc;
    for (auto& [e, c] : terms) p.terms.emplace(e * f, c);
    return p;
}

void PuiseuxMatrix::drop_zero_terms() {
    for (auto it = terms.begin(); it != terms.end();) {
        if (mat_is_zero(it->second)) it = terms.erase(it);
        else ++it;
    }
}

std::optional<Rat> PuiseuxMatrix::min_exponent() const {
    if (terms.empty()) return std::nullopt;
    return Rat(terms.begin()->first, ram);
}

FMat PuiseuxMatrix::coeff_at(const Rat& exponent) const {
    Rat scaled = exponent * ram;
    if (rat_den(scaled) != 1) return FMat::Constant(rows, cols, FieldElem(0));
    auto it = terms.find((int64_t)Int(rat_num(scaled)));
    if (it == terms.end()) return FMat::Constant(rows, cols, FieldElem(0));
    return it->second;
}

bool PuiseuxMatrix::is_zero() const { return terms.empty(); }

bool PuiseuxMatrix::exponents_integral() const {
    for (auto& [e, c] : terms) {
        if (e % ram != 0) return false;
    }
    return true;
}

std::map<int, FMat> PuiseuxMatrix::to_laurent() const {
    if (!exponents_integral())
        throw NonIntegralExponentError("PuiseuxMatrix: fractional exponent survives");
    std::map<int, FMat> out;
    for (auto& [e, c] : terms) out.emplace((int)(e / ram), c);
    return out;
}

PuiseuxMatrix PuiseuxMatrix::truncated(const Rat& keep_up_to) const {
    PuiseuxMatrix p = zero(rows, cols, ram);
    p.trunc = trunc;
    for (auto& [e, c] : terms) {
        if (Rat(e, ram) <= keep_up_to) p.terms.emplace(e, c);
    }
    return p;
}

PuiseuxMatrix PuiseuxMatrix::derivative() const {
    PuiseuxMatrix p = zero(rows, cols, ram);
    if (trunc) p.trunc = *trunc - 1;
    for (auto& [e, c] : terms) {
        if (e == 0) continue;
        p.terms.emplace(e - ram, FieldElem(Rat(e, ram)) * c);
    }
    p.drop_zero_terms();
    return p;
}

PuiseuxMatrix PuiseuxMatrix::galois_twist(const std::shared_ptr<const CycloField>& f) const {
    if (f->order() % ram != 0) throw Error("galois_twist: ramification does not divide field order");
    int64_t step = f->order() / ram;
    PuiseuxMatrix p = zero(rows, cols, ram);
    p.trunc = trunc;
    for (auto& [e, c] : terms) {
        int64_t em = ((e % ram) + ram) % ram;
        FieldElem z = FieldElem::zeta(f, em * step);
        p.terms.emplace(e, z * c);
    }
    return p;
}

PuiseuxMatrix PuiseuxMatrix::transpose() const {
    PuiseuxMatrix p = zero(cols, rows, ram);
    p.trunc = trunc;
    for (auto& [e, c] : terms) p.terms.emplace(e, c.transpose());
    return p;
}

namespace {
std::pair<PuiseuxMatrix, PuiseuxMatrix> align(const PuiseuxMatrix& a, const PuiseuxMatrix& b) {
    int r = std::lcm(a.ram, b.ram);
    return {a.with_ram(r), b.with_ram(r)};
}
}  // namespace

PuiseuxMatrix operator+(const PuiseuxMatrix& a, const PuiseuxMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw Error("PuiseuxMatrix: shape mismatch");
    auto [x, y] = align(a, b);
    PuiseuxMatrix p = PuiseuxMatrix::zero(x.rows, x.cols, x.ram);
    if (x.trunc && y.trunc) p.trunc = std::min(*x.trunc, *y.trunc);
    else if (x.trunc) p.trunc = x.trunc;
    else if (y.trunc) p.trunc = y.trunc;
    for (auto& [e, c] : x.terms) p.insert_term(e, c);
    for (auto& [e, c] : y.terms) p.insert_term(e, c);
    if (p.trunc) p = p.truncated(*p.trunc - Rat(1, p.ram));
    return p;
}

PuiseuxMatrix operator-(const PuiseuxMatrix& a, const PuiseuxMatrix& b) {
    return a + FieldElem(-1) * b;
}

PuiseuxMatrix operator*(const FieldElem& s, const PuiseuxMatrix& a) {
    PuiseuxMatrix p = PuiseuxMatrix::zero(a.rows, a.cols, a.ram);
    p.trunc = a.trunc;
    for (auto& [e, c] : a.terms) p.terms.emplace(e, s * c);
    p.drop_zero_terms();
    return p;
}

PuiseuxMatrix operator*(const PuiseuxMatrix& a, const PuiseuxMatrix& b) {
    if (a.cols != b.rows) throw Error("PuiseuxMatrix: product shape mismatch");
    auto [x, y] = align(a, b);
    PuiseuxMatrix p = PuiseuxMatrix::zero(x.rows, y.cols, x.ram);
    // sound truncation: t^v * O(t^u) = O(t^{v+u})
    if (x.trunc || y.trunc) {
        std::optional<Rat> bound;
        auto upd = [&](const Rat& r) { bound = bound ? std::min(*bound, r) : r; };
        if (x.trunc && !y.terms.empty()) upd(*x.trunc + Rat(y.terms.begin()->first, y.ram));
        if (y.trunc && !x.terms.empty()) upd(*y.trunc + Rat(x.terms.begin()->first, x.ram));
        if (x.trunc && y.trunc) upd(*x.trunc + *y.trunc);
        if (x.trunc && y.terms.empty() && !y.trunc) bound.reset();  // exact zero
        if (y.trunc && x.terms.empty() && !x.trunc) bound.reset();
        p.trunc = bound;
    }
    for (auto& [ea, ca] : x.terms) {
        for (auto& [eb, cb] : y.terms) {
            p.insert_term(ea + eb, ca * cb);
        }
    }
    if (p.trunc) p = p.truncated(*p.trunc - Rat(1, p.ram));
    return p;
}

bool operator==(const PuiseuxMatrix& a, const PuiseuxMatrix& b) {
    return (a - b).is_zero();
}

PuiseuxMatrix conjugate(const FMat& p, const PuiseuxMatrix& a, const FMat& p_inv) {
    PuiseuxMatrix r = PuiseuxMatrix::zero((int)p.rows(), (int)p_inv.cols(), a.ram);
    r.trunc = a.trunc;
    for (auto& [e, c] : a.terms) r.terms.emplace(e, p * c * p_inv);
    r.drop_zero_terms();
    return r;
}

PuiseuxMatrix puiseux_inverse_2x2(const PuiseuxMatrix& a) {
    if (a.rows != 2 || a.cols != 2) throw Error("puiseux_inverse_2x2: needs a 2x2 matrix");
    if (a.trunc) throw Error("puiseux_inverse_2x2: needs an exact Laurent-Puiseux polynomial");
    auto entry = [&](int i, int j) {
        PuiseuxMatrix e = PuiseuxMatrix::zero(1, 1, a.ram);
        for (auto& [ex, c] : a.terms) {
            FMat m(1, 1);
            m(0, 0) = c(i, j);
            e.insert_term(ex, m);
        }
        return e;
    };
    PuiseuxMatrix det = entry(0, 0) * entry(1, 1) - entry(0, 1) * entry(1, 0);
    det.drop_zero_terms();
    if (det.terms.size() != 1)
        throw Error("puiseux_inverse_2x2: determinant is not a unit monomial");
    auto& [de, dc] = *det.terms.begin();
    FieldElem dinv = dc(0, 0).inverse();
    PuiseuxMatrix adj = PuiseuxMatrix::zero(2, 2, a.ram);
    for (auto& [ex, c] : a.terms) {
        FMat m(2, 2);
        m(0, 0) = c(1, 1);
        m(1, 1) = c(0, 0);
        m(0, 1) = -c(0, 1);
        m(1, 0) = -c(1, 0);
        adj.insert_term(ex - de, dinv * m);
    }
    return adj;
}

SlopeResult unique_slope(const LaurentSeed& seed) {
    SlopeResult res;
    if (seed.terms.empty()) throw Error("unique_slope: empty seed");
    int n = seed.tag.n;
    int lowest = seed.terms.begin()->first;
    if (lowest >= -1) {
        res.slope = Rat(0);
        res.irregular = false;
        return res;
    }
    // supported shape: leading coefficient nilpotent (the companion forms)
    {
        FMat lead = seed.terms.begin()->second;
        FMat pw = lead;
        for (int k = 1; k < n; ++k) pw = pw * lead;
        if (!mat_is_zero(pw))
            throw UnsupportedKindError("unique_slope: leading coefficient is not nilpotent");
    }
    // g = diag(1, t^{1/n}, ..., t^{(n-1)/n}); g X g^{-1} shifts entry (i, j)
    // by (i - j)/n, and g' g^{-1} adds diag(i/n)/t.
    PuiseuxMatrix sheared = PuiseuxMatrix::zero(n, n, n);
    for (auto& [e, c] : seed.terms) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (c(i, j).is_zero()) continue;
                FMat single = FMat::Constant(n, n, FieldElem(0));
                single(i, j) = c(i, j);
                sheared.insert_term((int64_t)e * n + (i - j), single);
            }
        }
    }
    FMat shift = FMat::Constant(n, n, FieldElem(0));
    for (int i = 0; i < n; ++i) shift(i, i) = FieldElem(Rat(i, n));
    sheared.insert_term(-n, shift);
    sheared.drop_zero_terms();

    Rat lead_exp = *sheared.min_exponent();
    res.slope = -lead_exp;
    res.irregular = true;
    res.sheared_leading = sheared.coeff_at(lead_exp);

    // the sheared leading coefficient must be the semisimple A_{0,1}+A_{0,2}
    Poly<FieldElem> cp = charpoly(res.sheared_leading);
    Poly<FieldElem> expect;
    expect.c.assign(n + 1, FieldElem(0));
    expect.c[0] = FieldElem(-1);
    expect.c[n] = FieldElem(1);
    if (!(cp == expect))
        throw UnsupportedKindError("unique_slope: sheared leading part is not the lambda^n - 1 form");
    // slope a/n with gcd(a, n) = 1
    Int num = rat_num(res.slope), den = rat_den(res.slope);
    if (den != n || boost::multiprecision::gcd(num, den) != 1)
        throw Error("unique_slope: slope is not a reduced fraction with denominator n");
    return res;
}

}  // namespace diffgal
