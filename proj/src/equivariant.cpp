#include "diffgal/equivariant.hpp"

namespace diffgal {

ActionSpec ActionSpec::make_trivial() { return {}; }

ActionSpec ActionSpec::make_transpose_negate() {
    ActionSpec a;
    a.type = transpose_negate;
    a.order = 2;
    return a;
}

ActionSpec ActionSpec::make_conjugation(FMat s, int order) {
    ActionSpec a;
    a.type = conjugation;
    a.order = order;
    a.s = std::move(s);
    return a;
}

FMat apply_action(const ActionSpec& act, const FMat& v) {
    switch (act.type) {
        case ActionSpec::trivial: return v;
        case ActionSpec::transpose_negate: return FMat(-v.transpose());
        case ActionSpec::conjugation: {
            auto sinv = exact_inverse(act.s);
            if (!sinv) throw Error("ActionSpec: singular conjugation matrix");
            return FMat(act.s * v * (*sinv));
        }
    }
    throw Error("ActionSpec: unknown type");
}

KMat apply_action(const ActionSpec& act, const KMat& v) {
    switch (act.type) {
        case ActionSpec::trivial: return v;
        case ActionSpec::transpose_negate: {
            KMat r = v.transpose();
            for (int i = 0; i < r.rows(); ++i) {
                for (int j = 0; j < r.cols(); ++j) r(i, j) = -r(i, j);
            }
            return r;
        }
        case ActionSpec::conjugation: {
            auto sinv = exact_inverse(act.s);
            if (!sinv) throw Error("ActionSpec: singular conjugation matrix");
            return KMat(kummer_matrix(act.s) * v * kummer_matrix(*sinv));
        }
    }
    throw Error("ActionSpec: unknown type");
}

KMat apply_galois(const KMat& a, int64_t k, int n, const std::shared_ptr<const CycloField>& f) {
    KMat r = a;
    for (int i = 0; i < r.rows(); ++i) {
        for (int j = 0; j < r.cols(); ++j) {
            r(i, j) = r(i, j).with_ramification(n).galois(k, f);
        }
    }
    return r;
}

bool is_equivariant(const KMat& a, const ActionSpec& act, int n,
                    const std::shared_ptr<const CycloField>& f) {
    KMat lhs = apply_galois(a, 1, n, f);
    KMat rhs = apply_action(act, a);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            if (!(lhs(i, j) == rhs(i, j))) return false;
        }
    }
    return true;
}

namespace {

// matrix of the action on algebra-basis coordinates
DMat<FieldElem> action_matrix(const AlgebraTag& tag, const ActionSpec& act,
                              const std::vector<FMat>& basis) {
    int n = tag.n, s = (int)basis.size();
    DMat<FieldElem> flat(n * n, s);
    for (int k = 0; k < s; ++k) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) flat(i * n + j, k) = basis[k](i, j);
        }
    }
    DMat<FieldElem> r(s, s);
    for (int k = 0; k < s; ++k) {
        FMat img = apply_action(act, basis[k]);
        DVec<FieldElem> b(n * n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) b(i * n + j) = img(i, j);
        }
        auto x = exact_solve(flat, b);
        if (!x) throw Error("equivariant_basis: action leaves the algebra");
        r.col(k) = *x;
    }
    return r;
}

KummerElem kummer_det(KMat m) {
    int n = (int)m.rows();
    // fraction-valued Gaussian elimination; KummerElem is a field
    KummerElem det(1);
    for (int col = 0; col < n; ++col) {
        int p = -1;
        for (int i = col; i < n; ++i) {
            if (!m(i, col).is_zero()) { p = i; break; }
        }
        if (p < 0) return KummerElem(0);
        if (p != col) {
            m.row(p).swap(m.row(col));
            det = -det;
        }
        det = det * m(col, col);
        KummerElem inv = m(col, col).inverse();
        for (int i = col + 1; i < n; ++i) {
            if (m(i, col).is_zero()) continue;
            KummerElem f = m(i, col) * inv;
            for (int j = col; j < n; ++j) m(i, j) = m(i, j) - f * m(col, j);
        }
    }
    return det;
}

}  // namespace

BadSetReason EquivariantBasis::bad_point(const FieldElem& x, const FieldElem& root) const {
    if (n > 1 && x.is_zero()) return {true, "ramification point x = 0"};
    {
        FieldElem pw(1);
        for (int j = 0; j < n; ++j) pw = pw * root;
        if (!(pw == x)) return {true, "root^n != x"};
    }
    for (const KMat& e : elems) {
        for (int i = 0; i < e.rows(); ++i) {
            for (int j = 0; j < e.cols(); ++j) {
                for (const RatFunc& comp : e(i, j).components()) {
                    if (!comp.is_zero() && comp.pole_at(x)) return {true, "pole of a basis entry"};
                }
            }
        }
    }
    try {
        if (det_b.eval(x, root).is_zero()) return {true, "det(B) vanishes"};
    } catch (const BadPointError&) {
        return {true, "pole of det(B)"};
    }
    return {false, ""};
}

EquivariantBasis equivariant_basis(const AlgebraTag& tag, const ActionSpec& act,
                                   const std::shared_ptr<const CycloField>& f) {
    EquivariantBasis out;
    out.tag = tag;
    out.action = act;
    out.n = act.order;
    out.field = f;
    int n = act.order;
    if (f->order() % n != 0) throw ConductorError("equivariant_basis: field lacks zeta_n");

    auto basis = algebra_basis(tag);
    int s = (int)basis.size();
    if (act.type == ActionSpec::trivial) {
        out.elems.reserve(s);
        for (const FMat& b : basis) out.elems.push_back(kummer_matrix(b));
    } else {
        DMat<FieldElem> r = action_matrix(tag, act, basis);
        // finite order: eigenvalues are n-th roots of unity
        uint32_t m = f->order();
        DMat<FieldElem> id = DMat<FieldElem>::Constant(s, s, FieldElem(0));
        for (int i = 0; i < s; ++i) id(i, i) = FieldElem(1);
        int found = 0;
        for (int e = 0; e < n; ++e) {
            FieldElem lam = FieldElem::zeta(f, (int64_t)e * (m / n));
            DMat<FieldElem> shifted = r - lam * id;
            DMat<FieldElem> ker = exact_kernel(std::move(shifted));
            int weight = (n - e) % n;  // x^{weight/n} balances the eigenvalue
            for (int c = 0; c < ker.cols(); ++c) {
                FMat v = FMat::Constant(tag.n, tag.n, FieldElem(0));
                for (int k = 0; k < s; ++k) v += ker(k, c) * basis[k];
                KMat elem = kummer_matrix(v);
                KummerElem wfac = KummerElem::root_power(n, weight);
                for (int i = 0; i < elem.rows(); ++i) {
                    for (int j = 0; j < elem.cols(); ++j) elem(i, j) = wfac * elem(i, j);
                }
                out.elems.push_back(std::move(elem));
                ++found;
            }
        }
        if (found != s)
            throw Error("equivariant_basis: action is not diagonalizable (det B would vanish)");
    }
    // change of basis over K: solve flat * y = vec(elem) per element
    KMat kflat(tag.n * tag.n, s);
    for (int k = 0; k < s; ++k) {
        for (int i = 0; i < tag.n; ++i) {
            for (int j = 0; j < tag.n; ++j) kflat(i * tag.n + j, k) = KummerElem(basis[k](i, j));
        }
    }
    out.change_of_basis = KMat(s, s);
    for (int c = 0; c < s; ++c) {
        DVec<KummerElem> b(tag.n * tag.n);
        for (int i = 0; i < tag.n; ++i) {
            for (int j = 0; j < tag.n; ++j) b(i * tag.n + j) = out.elems[c](i, j);
        }
        auto y = exact_solve(KMat(kflat), DVec<KummerElem>(b));
        if (!y) throw Error("equivariant_basis: element leaves the algebra span");
        out.change_of_basis.col(c) = *y;
    }
    out.det_b = kummer_det(out.change_of_basis);
    if (out.det_b.is_zero()) throw Error("equivariant_basis: degenerate basis (det B = 0)");
    for (const KMat& e : out.elems) {
        if (!is_equivariant(e, act, act.order, f))
            throw Error("equivariant_basis: equivariance identity failed");
    }
    return out;
}

EquivariantBasis equivariant_basis_from(const AlgebraTag& tag, const ActionSpec& act,
                                        const std::shared_ptr<const CycloField>& f,
                                        std::vector<KMat> elems) {
    EquivariantBasis out;
    out.tag = tag;
    out.action = act;
    out.n = act.order;
    out.field = f;
    out.elems = std::move(elems);
    if ((int)out.elems.size() != tag.dim())
        throw Error("equivariant_basis_from: wrong number of elements");
    for (const KMat& e : out.elems) {
        if (!is_equivariant(e, act, act.order, f))
            throw Error("equivariant_basis_from: equivariance identity failed");
    }
    auto basis = algebra_basis(tag);
    int s = (int)basis.size();
    KMat kflat(tag.n * tag.n, s);
    for (int k = 0; k < s; ++k) {
        for (int i = 0; i < tag.n; ++i) {
            for (int j = 0; j < tag.n; ++j) kflat(i * tag.n + j, k) = KummerElem(basis[k](i, j));
        }
    }
    out.change_of_basis = KMat(s, s);
    for (int c = 0; c < s; ++c) {
        DVec<KummerElem> b(tag.n * tag.n);
        for (int i = 0; i < tag.n; ++i) {
            for (int j = 0; j < tag.n; ++j) b(i * tag.n + j) = out.elems[c](i, j);
        }
        auto y = exact_solve(KMat(kflat), DVec<KummerElem>(b));
        if (!y) throw Error("equivariant_basis_from: element leaves the algebra span");
        out.change_of_basis.col(c) = *y;
    }
    out.det_b = kummer_det(out.change_of_basis);
    if (out.det_b.is_zero()) throw Error("equivariant_basis_from: degenerate basis (det B = 0)");
    return out;
}

}  // namespace diffgal
