#include "diffgal/local_model.hpp"

#include <functional>
#include <numeric>

namespace diffgal {

namespace {

FMat fmat_zero(int n) { return FMat::Constant(n, n, FieldElem(0)); }

FMat fmat_identity(int n) {
    FMat m = fmat_zero(n);
    for (int i = 0; i < n; ++i) m(i, i) = FieldElem(1);
    return m;
}

bool fmat_is_zero(const FMat& m) {
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_zero()) return false;
        }
    }
    return true;
}

FMat exp_nilpotent(const FMat& x) {
    int n = (int)x.rows();
    FMat acc = fmat_identity(n), pw = fmat_identity(n);
    Rat fact(1);
    for (int k = 1; k <= n; ++k) {
        pw = pw * x;
        if (fmat_is_zero(pw)) break;
        fact *= k;
        acc += FieldElem(Rat(1) / fact) * pw;
    }
    return acc;
}

int matrix_order(const FMat& g, int guard = 10000) {
    int n = (int)g.rows();
    FMat pw = g;
    for (int k = 1; k <= guard; ++k) {
        if (pw == fmat_identity(n)) return k;
        pw = pw * g;
    }
    throw Error("matrix_order: order guard exceeded");
}

// coordinates of a torus algebra element in cartan_basis
DVec<FieldElem> torus_coords(const AlgebraTag& tag, const FMat& m) {
    auto basis = cartan_basis(tag);
    int n = tag.n, l = (int)basis.size();
    DMat<FieldElem> a(n * n, l);
    DVec<FieldElem> b(n * n);
    for (int k = 0; k < l; ++k) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) a(i * n + j, k) = basis[k](i, j);
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) b(i * n + j) = m(i, j);
    }
    auto x = exact_solve(a, b);
    if (!x) throw Error("torus_coords: element is not in the Cartan subalgebra");
    return *x;
}

struct SignedPerm {
    std::vector<int> to;          // g e_j = val[j] * e_{to[j]}
    std::vector<FieldElem> val;
};

SignedPerm signed_perm_of(const FMat& g) {
    int n = (int)g.rows();
    SignedPerm sp;
    sp.to.assign(n, -1);
    sp.val.assign(n, FieldElem(0));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            if (g(i, j).is_zero()) continue;
            if (sp.to[j] >= 0) throw Error("weyl lift is not a monomial matrix");
            sp.to[j] = i;
            sp.val[j] = g(i, j);
        }
        if (sp.to[j] < 0) throw Error("weyl lift has a zero column");
    }
    return sp;
}

struct EigenColumn {
    DVec<FieldElem> vec;
    int t;  // eigenvalue zeta_{m'}^t, 0 <= t < m'
};

// eigen-decomposition of a monomial matrix of finite order via its cycles
std::vector<EigenColumn> monomial_eigenvectors(const FMat& g, int order,
                                               const std::shared_ptr<const CycloField>& f) {
    int n = (int)g.rows();
    uint32_t M = f->order();
    if (M % order != 0) throw Error("field order does not contain the witness order");
    SignedPerm sp = signed_perm_of(g);
    std::vector<EigenColumn> cols;
    std::vector<bool> seen(n, false);
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::vector<int> cycle;
        int j = start;
        FieldElem sign(1);
        while (!seen[j]) {
            seen[j] = true;
            cycle.push_back(j);
            sign = sign * sp.val[j];
            j = sp.to[j];
        }
        int k = (int)cycle.size();
        // sign is a root of unity zeta_{m'}^a; find a
        int a = -1;
        for (int cand = 0; cand < order; ++cand) {
            if (sign == FieldElem::zeta(f, (int64_t)cand * (M / order))) { a = cand; break; }
        }
        if (a < 0) throw Error("cycle sign is not a power of zeta_{m'}");
        for (int u = 0; u < k; ++u) {
            int num = a + order * u;
            if (num % k != 0) continue;
            int t = (num / k) % order;
            FieldElem lam_inv = FieldElem::zeta(f, (int64_t)((order - t) % order) * (M / order));
            DVec<FieldElem> v = DVec<FieldElem>::Constant(n, FieldElem(0));
            FieldElem c(1);
            for (int step = 0; step < k; ++step) {
                v(cycle[step]) = c;
                c = sp.val[cycle[step]] * c * lam_inv;
            }
            cols.push_back({std::move(v), t});
        }
    }
    if ((int)cols.size() != n) throw Error("monomial eigendecomposition incomplete");
    return cols;
}

// Square root of a monomial c * zeta^e; throws NeedsLargerField when the
// result lives in a bigger cyclotomic field, plain Error when unsupported.
FieldElem monomial_sqrt(const FieldElem& x, const std::shared_ptr<const CycloField>& f) {
    if (x.is_zero()) return FieldElem(0);
    if (x.terms().size() != 1) throw Error("monomial_sqrt: not a monomial");
    auto [e, c] = x.terms()[0];
    uint32_t M = f->order();
    int64_t half;
    if (e % 2 == 0) half = e / 2;
    else if (M % 2 == 1) half = ((int64_t)e + M) / 2;
    else throw NeedsLargerField(2 * M);
    FieldElem res = sqrt_rational(c, f) * FieldElem::zeta(f, half);
    if (!(res * res == x)) throw Error("monomial_sqrt: verification failed");
    return res;
}

using BForm = std::function<FieldElem(const DVec<FieldElem>&, const DVec<FieldElem>&)>;

// Splits a B-nondegenerate space (spanned by vecs) into two totally isotropic
// halves; B symmetric or alternating.
std::pair<std::vector<DVec<FieldElem>>, std::vector<DVec<FieldElem>>> isotropic_split(
    std::vector<DVec<FieldElem>> vecs, const BForm& B, bool symmetric,
    const std::shared_ptr<const CycloField>& f) {
    std::vector<DVec<FieldElem>> plus, minus;
    while (!vecs.empty()) {
        if (vecs.size() % 2 != 0)
            throw Error("isotropic_split: odd-dimensional -1 eigenspace");
        // find an isotropic vector in the span
        std::optional<DVec<FieldElem>> v;
        if (!symmetric) {
            v = vecs[0];  // alternating: everything is isotropic
        } else {
            for (auto& u : vecs) {
                if (B(u, u).is_zero()) { v = u; break; }
            }
            if (!v) {
                uint32_t needed = 0;
                for (size_t i = 0; !v && i < vecs.size(); ++i) {
                    for (size_t j = i + 1; !v && j < vecs.size(); ++j) {
                        // u_i + c u_j isotropic: solve the quadratic
                        // B_ii + 2c B_ij + c^2 B_jj = 0 by a field square root
                        FieldElem bii = B(vecs[i], vecs[i]), bjj = B(vecs[j], vecs[j]);
                        FieldElem bij = B(vecs[i], vecs[j]);
                        if (bjj.is_zero()) { v = vecs[j]; break; }
                        FieldElem disc = bij * bij - bii * bjj;
                        try {
                            FieldElem root = monomial_sqrt(disc, f);
                            FieldElem c = (-bij + root) / bjj;
                            DVec<FieldElem> cand = vecs[i] + c * vecs[j];
                            if (B(cand, cand).is_zero()) v = cand;
                        } catch (const NeedsLargerField& e) {
                            needed = needed ? std::lcm(needed, e.order) : e.order;
                        } catch (const Error&) {
                        }
                    }
                }
                if (!v && needed) throw NeedsLargerField(needed);
            }
            if (!v)
                throw Error("isotropic_split: no in-field isotropic vector found for this witness");
        }
        // hyperbolic partner
        std::optional<DVec<FieldElem>> w;
        for (auto& u : vecs) {
            if (!B(*v, u).is_zero()) { w = u; break; }
        }
        if (!w) throw Error("isotropic_split: degenerate restriction");
        FieldElem beta = B(*v, *w);
        if (symmetric) *w = *w - (B(*w, *w) / (FieldElem(2) * beta)) * (*v);
        // orthogonalize the rest against the hyperbolic pair and keep an
        // independent subset of the projections
        std::vector<DVec<FieldElem>> rest;
        for (auto& u : vecs) {
            DVec<FieldElem> up;
            if (symmetric) {
                up = u - (B(u, *w) / beta) * (*v) - (B(u, *v) / beta) * (*w);
            } else {
                // alternating: B(v,w) = beta, B(w,v) = -beta
                up = u - (B(*v, u) / beta) * (*w) + (B(*w, u) / beta) * (*v);
            }
            rest.push_back(std::move(up));
        }
        int n = (int)rest[0].size();
        DMat<FieldElem> mat(n, (int)rest.size());
        for (size_t k = 0; k < rest.size(); ++k) mat.col((int)k) = rest[k];
        DMat<FieldElem> probe = mat;
        auto pivcols = exact_rref(probe);
        std::vector<DVec<FieldElem>> next;
        // pivot columns of the echelon give an independent spanning subset
        for (size_t pi = 0; pi < pivcols.size(); ++pi) next.push_back(rest[pivcols[pi]]);
        if (next.size() != vecs.size() - 2)
            throw Error("isotropic_split: unexpected rank drop");
        plus.push_back(*v);
        minus.push_back(*w);
        vecs = std::move(next);
    }
    return {plus, minus};
}

}  // namespace

uint32_t witness_field_order(Kind kind, int rank, const std::vector<int>& word) {
    auto tag = algebra_for(kind, rank);
    auto pairs = simple_root_pairs(tag);
    FMat g = fmat_identity(tag.n);
    for (int w : word) {
        if (w < 1 || w > (int)pairs.size()) throw Error("weyl word index out of range");
        const auto& p = pairs[w - 1];
        g = g * (exp_nilpotent(p.x) * exp_nilpotent(FieldElem(-1) * p.y) * exp_nilpotent(p.x));
    }
    uint32_t m = std::lcm((uint32_t)matrix_order(g), 4u);
    // the isotropic splitting of the -1 eigenspace may need extra square
    // roots; probe the construction and grow the order until it goes through
    for (int attempt = 0; attempt < 8; ++attempt) {
        try {
            auto f = CycloField::make(m);
            auto w = weyl_lift(kind, rank, word, f);
            hilbert90_eta(w);
            toric_equation(w);
            return m;
        } catch (const NeedsLargerField& e) {
            m = std::lcm(m, e.order);
        }
    }
    throw Error("witness_field_order: field requirement did not stabilize");
}

ToricWitness weyl_lift(Kind kind, int rank, const std::vector<int>& word,
                       const std::shared_ptr<const CycloField>& f) {
    ToricWitness w;
    w.tag = algebra_for(kind, rank);
    w.field = f;
    auto pairs = simple_root_pairs(w.tag);
    FMat g = fmat_identity(w.tag.n);
    for (int s : word) {
        if (s < 1 || s > (int)pairs.size()) throw Error("weyl_lift: word index out of range");
        const auto& p = pairs[s - 1];
        g = g * (exp_nilpotent(p.x) * exp_nilpotent(FieldElem(-1) * p.y) * exp_nilpotent(p.x));
    }
    w.g = std::move(g);
    w.order = matrix_order(w.g);
    if (f->order() % w.order != 0)
        throw ConductorError("weyl_lift: field lacks zeta_" + std::to_string(w.order));

    // action on the Cartan subalgebra; the direction X -> g^{-1} X g is the
    // one that makes the glued model's fractional parts cancel:
    // Abar^{gamma'} = Abar needs Atilde^gamma = g^{-1} Atilde g
    auto torus = cartan_basis(w.tag);
    int l = (int)torus.size();
    FMat ginv_mat;
    {
        auto inv = exact_inverse(w.g);
        if (!inv) throw Error("weyl_lift: lift is singular");
        ginv_mat = *inv;
    }
    w.dphi = DMat<FieldElem>(l, l);
    for (int k = 0; k < l; ++k) {
        FMat conj = ginv_mat * torus[k] * w.g;
        w.dphi.col(k) = torus_coords(w.tag, conj);
    }
    // order of dphi
    {
        auto is_identity = [&](const DMat<FieldElem>& x) {
            for (int i = 0; i < l; ++i) {
                for (int j = 0; j < l; ++j) {
                    if (!(x(i, j) == FieldElem(i == j ? 1 : 0))) return false;
                }
            }
            return true;
        };
        DMat<FieldElem> pw = w.dphi;
        int m = 1;
        while (!is_identity(pw)) {
            pw = (pw * w.dphi).eval();
            if (++m > w.order) throw Error("weyl_lift: dphi order exceeds the witness order");
        }
        w.dphi_order = m;
    }
    return w;
}

Hilbert90 hilbert90_eta(const ToricWitness& w) {
    const auto& f = w.field;
    int n = w.tag.n, mp = w.order;
    auto cols = monomial_eigenvectors(w.g, mp, f);

    // exponent selection: symmetric representatives, with the -1 eigenspace
    // split into dual isotropic halves for sp/so and a zero-sum fix for sl
    std::vector<int64_t> expo(cols.size());
    if (w.tag.family == AlgebraTag::sp || w.tag.family == AlgebraTag::so) {
        FMat s = algebra_form(w.tag);
        BForm B = [&](const DVec<FieldElem>& a, const DVec<FieldElem>& b) {
            return FieldElem((a.transpose() * s * b)(0, 0));
        };
        std::vector<size_t> minus_ones;
        for (size_t i = 0; i < cols.size(); ++i) {
            int t = cols[i].t;
            if (2 * t % mp == 0 && t != 0) minus_ones.push_back(i);
            else expo[i] = (2 * t < mp) ? t : t - mp;
        }
        if (!minus_ones.empty()) {
            std::vector<DVec<FieldElem>> vecs;
            for (size_t i : minus_ones) vecs.push_back(cols[i].vec);
            auto [plus, minus] = isotropic_split(std::move(vecs), B, w.tag.family == AlgebraTag::so, f);
            for (size_t k = 0; k < plus.size(); ++k) {
                cols[minus_ones[2 * k]].vec = plus[k];
                expo[minus_ones[2 * k]] = mp / 2;
                cols[minus_ones[2 * k + 1]].vec = minus[k];
                expo[minus_ones[2 * k + 1]] = -mp / 2;
            }
        }
    } else {
        int64_t sum = 0;
        for (size_t i = 0; i < cols.size(); ++i) {
            int t = cols[i].t;
            expo[i] = (2 * t <= mp) ? t : t - mp;
            sum += expo[i];
        }
        if (sum % mp != 0)
            throw Error("hilbert90_eta: exponent sum not divisible by the order (det != 1?)");
        // shift whole multiples of m' off the largest exponents
        std::vector<size_t> idx(cols.size());
        std::iota(idx.begin(), idx.end(), 0);
        while (sum != 0) {
            if (sum > 0) {
                size_t best = *std::max_element(idx.begin(), idx.end(),
                                                [&](size_t a, size_t b) { return expo[a] < expo[b]; });
                expo[best] -= mp;
                sum -= mp;
            } else {
                size_t best = *std::min_element(idx.begin(), idx.end(),
                                                [&](size_t a, size_t b) { return expo[a] < expo[b]; });
                expo[best] += mp;
                sum += mp;
            }
        }
    }

    FMat p(n, n);
    for (int j = 0; j < n; ++j) p.col(j) = cols[j].vec;
    auto pinv = exact_inverse(p);
    if (!pinv) throw Error("hilbert90_eta: eigenvector matrix is singular");

    Hilbert90 h;
    h.eta = PuiseuxMatrix::zero(n, n, mp);
    h.eta_inv = PuiseuxMatrix::zero(n, n, mp);
    std::map<int64_t, FMat> proj;  // exponent -> P E_k P^{-1} accumulated
    for (int j = 0; j < n; ++j) {
        FMat e = fmat_zero(n);
        e(j, j) = FieldElem(1);
        FMat term = p * e * (*pinv);
        auto [it, fresh] = proj.emplace(expo[j], term);
        if (!fresh) it->second += term;
    }
    FMat logc = fmat_zero(n);
    for (auto& [e, c] : proj) {
        h.eta.insert_term(e, c);
        h.eta_inv.insert_term(-e, c);
        logc += FieldElem(Rat(e, mp)) * c;
    }
    h.eta_logderiv = PuiseuxMatrix::zero(n, n, 1);
    h.eta_logderiv.insert_term(-1, logc);

    // verified identities: eta eta_inv = 1 and eta^{gamma'} = eta g
    if (!((h.eta * h.eta_inv) == PuiseuxMatrix::identity(n, mp)))
        throw Error("hilbert90_eta: eta inverse check failed");
    PuiseuxMatrix g_const = PuiseuxMatrix::zero(n, n, 1);
    g_const.insert_term(0, w.g);
    if (!(h.eta.galois_twist(f) == h.eta * g_const))
        throw Error("hilbert90_eta: eta^{gamma'} = eta g failed");
    if (w.tag.family == AlgebraTag::sp || w.tag.family == AlgebraTag::so) {
        FMat s = algebra_form(w.tag);
        PuiseuxMatrix s_const = PuiseuxMatrix::zero(n, n, 1);
        s_const.insert_term(0, s);
        if (!(h.eta.transpose() * s_const * h.eta == s_const))
            throw Error("hilbert90_eta: eta does not preserve the bilinear form");
    }
    return h;
}

PuiseuxMatrix toric_equation(const ToricWitness& w) {
    const auto& f = w.field;
    int m = w.dphi_order;
    uint32_t M = f->order();
    if (M % m != 0) throw Error("toric_equation: field lacks zeta_m");
    int l = (int)w.dphi.rows();
    DMat<FieldElem> id = DMat<FieldElem>::Constant(l, l, FieldElem(0));
    for (int i = 0; i < l; ++i) id(i, i) = FieldElem(1);

    PuiseuxMatrix a = PuiseuxMatrix::zero(w.tag.n, w.tag.n, m);
    int total_dim = 0;
    for (int e = 0; e < m; ++e) {
        FieldElem lam = FieldElem::zeta(f, (int64_t)e * (M / m));
        DMat<FieldElem> shifted = w.dphi - lam * id;
        DMat<FieldElem> ker = exact_kernel(std::move(shifted));
        if (ker.cols() == 0) continue;
        total_dim += (int)ker.cols();
        int q = (m - e) % m;
        for (int j = 0; j < ker.cols(); ++j) {
            FMat b = torus_element(w.tag, ker.col(j));
            // z^{-q/m} z^{-(j+1)-1}... the lemma's j runs 1..r_q
            int64_t num = -(int64_t)q - (int64_t)m * (j + 2);
            a.insert_term(num, b);
        }
    }
    if (total_dim != l) throw Error("toric_equation: dphi is not diagonalizable over the field");

    if (!(a.galois_twist(f) == apply_dphi(w, a)))
        throw Error("toric_equation: A^gamma = dphi(A) failed");
    return a;
}

PuiseuxMatrix apply_dphi(const ToricWitness& w, const PuiseuxMatrix& a) {
    PuiseuxMatrix out = PuiseuxMatrix::zero(a.rows, a.cols, a.ram);
    out.trunc = a.trunc;
    for (auto& [e, c] : a.terms) {
        DVec<FieldElem> coords = torus_coords(w.tag, c);
        out.insert_term(e, torus_element(w.tag, w.dphi * coords));
    }
    return out;
}

ToricModel toric_model_from(const ToricWitness& w, const PuiseuxMatrix& eta,
                            const PuiseuxMatrix& eta_inv, const PuiseuxMatrix& atilde,
                            int q_trunc) {
    PuiseuxMatrix abar = eta.derivative() * eta_inv + eta * atilde * eta_inv;
    abar.drop_zero_terms();
    ToricModel model;
    model.abar = abar;
    auto laurent = abar.to_laurent();  // throws if fractional exponents survive
    LaurentSeed seed;
    seed.tag = w.tag;
    for (auto& [e, c] : laurent) {
        if (e > q_trunc) continue;
        if (!algebra_member(c, w.tag))
            throw Error("toric_model: coefficient leaves " + algebra_name(w.tag));
        seed.terms.emplace(e, c);
    }
    model.seed = std::move(seed);
    return model;
}

ToricModel toric_model(const ToricWitness& w, int q_trunc) {
    Hilbert90 h = hilbert90_eta(w);
    PuiseuxMatrix atilde = toric_equation(w);
    PuiseuxMatrix abar = h.eta_logderiv + h.eta * atilde * h.eta_inv;
    abar.drop_zero_terms();
    ToricModel model;
    model.abar = abar;
    auto laurent = abar.to_laurent();
    LaurentSeed seed;
    seed.tag = w.tag;
    for (auto& [e, c] : laurent) {
        if (e > q_trunc) continue;
        if (!algebra_member(c, w.tag))
            throw Error("toric_model: coefficient leaves " + algebra_name(w.tag));
        seed.terms.emplace(e, c);
    }
    model.seed = std::move(seed);
    return model;
}

}  // namespace diffgal
