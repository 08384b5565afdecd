#include "diffgal/jets.hpp"

#include <functional>
#include <numeric>

namespace diffgal {

bool algebra_member(const KMat& x, const AlgebraTag& tag) {
    if (x.rows() != tag.n || x.cols() != tag.n) return false;
    if (tag.family == AlgebraTag::gl) return true;
    if (tag.family == AlgebraTag::sl) {
        KummerElem tr(0);
        for (int i = 0; i < tag.n; ++i) tr += x(i, i);
        return tr.is_zero();
    }
    KMat s = kummer_matrix(algebra_form(tag));
    KMat lhs = x.transpose() * s + s * x;
    for (int i = 0; i < tag.n; ++i) {
        for (int j = 0; j < tag.n; ++j) {
            if (!lhs(i, j).is_zero()) return false;
        }
    }
    return true;
}

namespace {

// ansatz function: (x - base)^k, or x^k for the polynomial part (base unset)
struct AnsatzFunc {
    std::optional<FieldElem> base;
    int k = 0;

    RatFunc realize() const {
        Poly<FieldElem> lin{{base ? -(*base) : FieldElem(0), FieldElem(1)}};
        if (!base) lin = Poly<FieldElem>::monomial(1, FieldElem(1));
        Poly<FieldElem> pw = Poly<FieldElem>::constant(FieldElem(1));
        for (int i = 0; i < std::abs(k); ++i) pw = pw * lin;
        if (k >= 0) return RatFunc::from_poly(pw);
        return RatFunc(Poly<FieldElem>::constant(FieldElem(1)), pw);
    }

    // expansion coefficients of the function at p, orders v..hi
    LaurentSeries expand_at(const FieldElem& p, int hi) const {
        return laurent_expand(realize(), p, hi);
    }
};

}  // namespace

Interpolation interpolate_jets(const EquivariantBasis& basis, const JetSpec& spec) {
    const auto& tag = basis.tag;
    const auto& f = basis.field;
    int n = tag.n, s = (int)basis.elems.size();
    if (spec.points.empty()) throw BadPointError("interpolate_jets: empty point plan");

    // preconditions: distinct projections, points outside the bad set
    for (size_t i = 0; i < spec.points.size(); ++i) {
        const auto& pt = spec.points[i];
        for (size_t j = i + 1; j < spec.points.size(); ++j) {
            if (pt.x == spec.points[j].x)
                throw BadPointError("interpolate_jets: coinciding x-projections");
        }
        auto bad = basis.bad_point(pt.x, pt.root);
        if (bad.bad) throw BadPointError("interpolate_jets: point in the bad set: " + bad.reason);
        if (pt.lo > pt.hi) throw BadPointError("interpolate_jets: empty jet range");
    }

    // basis element expansions at every point, to the largest needed order
    std::vector<std::vector<std::map<int, FMat>>> elem_exp(spec.points.size());
    for (size_t i = 0; i < spec.points.size(); ++i) {
        const auto& pt = spec.points[i];
        int need = pt.hi - std::min(pt.lo, 0);  // f-order lo..hi, elem orders 0..need
        elem_exp[i].reserve(s);
        for (int j = 0; j < s; ++j) {
            elem_exp[i].push_back(laurent_expand_matrix(basis.elems[j], pt.x, pt.root, need));
        }
    }

    int poly_extra = 0;
    for (const auto& pt : spec.points) poly_extra += std::max(pt.hi + 1, 0);

    for (int attempt = 0; attempt < 3; ++attempt, poly_extra += (int)spec.points.size() + 1) {
        // ansatz: per-point pole terms plus a global polynomial part
        std::vector<AnsatzFunc> funcs;
        for (const auto& pt : spec.points) {
            for (int k = pt.lo; k <= -1; ++k) funcs.push_back({pt.x, k});
        }
        for (int d = 0; d <= poly_extra; ++d) funcs.push_back({std::nullopt, d});
        int nf = (int)funcs.size();

        // expansions of ansatz functions at every point
        std::vector<std::vector<LaurentSeries>> fexp(spec.points.size());
        for (size_t i = 0; i < spec.points.size(); ++i) {
            for (const auto& fn : funcs) {
                fexp[i].push_back(fn.expand_at(spec.points[i].x, spec.points[i].hi));
            }
        }

        // unknowns: c[j * nf + phi]; rows: per point, order, entry.  The
        // system splits into independent components (basis elements usually
        // have disjoint supports), so assemble sparse rows, find connected
        // components over shared unknowns, and solve each one separately.
        struct SparseRow {
            std::vector<std::pair<int, FieldElem>> entries;
            FieldElem rhs;
        };
        std::vector<SparseRow> rows;
        for (size_t i = 0; i < spec.points.size(); ++i) {
            const auto& pt = spec.points[i];
            for (int m = pt.lo; m <= pt.hi; ++m) {
                FMat target = FMat::Constant(n, n, FieldElem(0));
                auto itc = pt.coeffs.find(m);
                if (itc != pt.coeffs.end()) target = itc->second;
                for (int a = 0; a < n; ++a) {
                    for (int b = 0; b < n; ++b) {
                        SparseRow row;
                        row.rhs = target(a, b);
                        for (int j = 0; j < s; ++j) {
                            for (int phi = 0; phi < nf; ++phi) {
                                // coeff of t^m in f_phi * elem_j
                                FieldElem acc(0);
                                const LaurentSeries& fs = fexp[i][phi];
                                for (int m1 = fs.lo; m1 <= std::min(m, fs.hi); ++m1) {
                                    auto ite = elem_exp[i][j].find(m - m1);
                                    if (ite == elem_exp[i][j].end()) continue;
                                    if (fs.at(m1).is_zero()) continue;
                                    acc += fs.at(m1) * ite->second(a, b);
                                }
                                if (!acc.is_zero()) row.entries.emplace_back(j * nf + phi, acc);
                            }
                        }
                        rows.push_back(std::move(row));
                    }
                }
            }
        }

        // union-find over unknowns appearing in a common row
        std::vector<int> parent(s * nf);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        bool consistent = true;
        for (const auto& row : rows) {
            if (row.entries.empty()) {
                if (!row.rhs.is_zero()) consistent = false;
                continue;
            }
            int r0 = find(row.entries[0].first);
            for (auto& [v, c] : row.entries) parent[find(v)] = r0;
        }
        if (!consistent) continue;

        std::map<int, std::vector<int>> comp_rows;   // root -> row indices
        std::map<int, std::vector<int>> comp_vars;   // root -> variable list
        for (int v = 0; v < s * nf; ++v) comp_vars[find(v)].push_back(v);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].entries.empty()) continue;
            comp_rows[find(rows[r].entries[0].first)].push_back((int)r);
        }
        DVec<FieldElem> solution = DVec<FieldElem>::Constant(s * nf, FieldElem(0));
        for (auto& [root, vars] : comp_vars) {
            auto itr = comp_rows.find(root);
            if (itr == comp_rows.end()) continue;  // unconstrained: zero
            std::map<int, int> colof;
            for (size_t k = 0; k < vars.size(); ++k) colof.emplace(vars[k], (int)k);
            DMat<FieldElem> mat =
                DMat<FieldElem>::Constant((int)itr->second.size(), (int)vars.size(), FieldElem(0));
            DVec<FieldElem> rhs = DVec<FieldElem>::Constant((int)itr->second.size(), FieldElem(0));
            for (size_t r = 0; r < itr->second.size(); ++r) {
                const SparseRow& row = rows[itr->second[r]];
                rhs((int)r) = row.rhs;
                for (auto& [v, c] : row.entries) mat((int)r, colof.at(v)) = c;
            }
            auto sol = exact_solve(mat, rhs);
            if (!sol) { consistent = false; break; }
            for (size_t k = 0; k < vars.size(); ++k) solution(vars[k]) = (*sol)((int)k);
        }
        if (!consistent) continue;  // widen the polynomial part and retry
        DVec<FieldElem> solvec = std::move(solution);
        auto sol = std::optional<DVec<FieldElem>>(std::move(solvec));

        Interpolation out;
        out.f.assign(s, RatFunc());
        for (int j = 0; j < s; ++j) {
            for (int phi = 0; phi < nf; ++phi) {
                const FieldElem& c = (*sol)(j * nf + phi);
                if (c.is_zero()) continue;
                out.f[j] += RatFunc(c) * funcs[phi].realize();
            }
        }
        out.a = KMat(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) out.a(i, j) = KummerElem(0);
        }
        for (int j = 0; j < s; ++j) {
            if (out.f[j].is_zero()) continue;
            KummerElem fj(out.f[j]);
            for (int a = 0; a < n; ++a) {
                for (int b = 0; b < n; ++b) out.a(a, b) += fj * basis.elems[j](a, b);
            }
        }

        // independent re-expansion of the assembled matrix at every point
        for (const auto& pt : spec.points) {
            auto exp = laurent_expand_matrix(out.a, pt.x, pt.root, pt.hi);
            if (!exp.empty() && exp.begin()->first < pt.lo)
                throw InterpolationError("interpolate_jets: pole below the prescribed range");
            for (int m = pt.lo; m <= pt.hi; ++m) {
                FMat got = FMat::Constant(n, n, FieldElem(0));
                if (auto it = exp.find(m); it != exp.end()) got = it->second;
                FMat want = FMat::Constant(n, n, FieldElem(0));
                if (auto itc = pt.coeffs.find(m); itc != pt.coeffs.end()) want = itc->second;
                for (int a = 0; a < n; ++a) {
                    for (int b = 0; b < n; ++b) {
                        if (!(got(a, b) == want(a, b)))
                            throw InterpolationError("interpolate_jets: re-expansion mismatch");
                    }
                }
            }
        }
        if (!is_equivariant(out.a, basis.action, basis.n, f))
            throw InterpolationError("interpolate_jets: equivariance identity failed");
        if (!algebra_member(out.a, tag))
            throw InterpolationError("interpolate_jets: result leaves the algebra");
        return out;
    }
    throw InterpolationError("interpolate_jets: linear system inconsistent");
}

}  // namespace diffgal
