#include "diffgal/lie_algebra.hpp"

#include <numeric>

namespace diffgal {

namespace {

FMat zero(int n) { return FMat::Constant(n, n, FieldElem(0)); }

FMat unit(int n, int r, int c) {  // 1-based E_{r,c}
    FMat m = zero(n);
    m(r - 1, c - 1) = FieldElem(1);
    return m;
}

std::vector<uint32_t> first_primes(int count) {
    std::vector<uint32_t> ps;
    for (uint32_t q = 2; (int)ps.size() < count; ++q) {
        bool prime = q >= 2;
        for (uint32_t d = 2; d * d <= q; ++d) {
            if (q % d == 0) { prime = false; break; }
        }
        if (prime) ps.push_back(q);
    }
    return ps;
}

}  // namespace

int AlgebraTag::rank() const {
    switch (family) {
        case sl: return n - 1;
        case sp:
        case so: return n / 2;
        case gl: return n;
    }
    return 0;
}

int AlgebraTag::dim() const {
    switch (family) {
        case sl: return n * n - 1;
        case sp: return n / 2 * (n + 1);
        case so: return n / 2 * (n - 1);
        case gl: return n * n;
    }
    return 0;
}

AlgebraTag algebra_for(Kind kind, int rank) {
    switch (kind) {
        case Kind::A: return {AlgebraTag::sl, rank + 1};
        case Kind::C: return {AlgebraTag::sp, 2 * rank};
        case Kind::D: return {AlgebraTag::so, 2 * rank};
        default:
            throw UnsupportedKindError("no matrix realization implemented for type " +
                                       kind_to_string(kind));
    }
}

std::string algebra_name(const AlgebraTag& tag) {
    switch (tag.family) {
        case AlgebraTag::sl: return "sl(" + std::to_string(tag.n) + ")";
        case AlgebraTag::sp: return "sp(" + std::to_string(tag.n) + ")";
        case AlgebraTag::so: return "so(" + std::to_string(tag.n) + ")";
        case AlgebraTag::gl: return "gl(" + std::to_string(tag.n) + ")";
    }
    return "?";
}

FMat algebra_form(const AlgebraTag& tag) {
    int n = tag.n, l = n / 2;
    if (tag.family == AlgebraTag::sp) {
        // J = [[0, K], [-K, 0]], K the exchange matrix
        FMat j = zero(n);
        for (int i = 1; i <= l; ++i) {
            j(i - 1, l + (l + 1 - i) - 1) = FieldElem(1);
            j(l + (l + 1 - i) - 1, i - 1) = FieldElem(-1);
        }
        return j;
    }
    if (tag.family == AlgebraTag::so) {
        // Q = [[0, I], [I, 0]]
        FMat q = zero(n);
        for (int i = 1; i <= l; ++i) {
            q(i - 1, l + i - 1) = FieldElem(1);
            q(l + i - 1, i - 1) = FieldElem(1);
        }
        return q;
    }
    return FMat();
}

bool algebra_member(const FMat& x, const AlgebraTag& tag) {
    if (x.rows() != tag.n || x.cols() != tag.n) return false;
    if (tag.family == AlgebraTag::gl) return true;
    if (tag.family == AlgebraTag::sl) {
        FieldElem tr(0);
        for (int i = 0; i < tag.n; ++i) tr += x(i, i);
        return tr.is_zero();
    }
    FMat s = algebra_form(tag);
    FMat lhs = x.transpose() * s + s * x;
    for (int i = 0; i < tag.n; ++i) {
        for (int j = 0; j < tag.n; ++j) {
            if (!lhs(i, j).is_zero()) return false;
        }
    }
    return true;
}

std::vector<FMat> cartan_basis(const AlgebraTag& tag) {
    std::vector<FMat> h;
    int n = tag.n, l = n / 2;
    switch (tag.family) {
        case AlgebraTag::sl:
            for (int i = 1; i < n; ++i) h.push_back(unit(n, i, i) - unit(n, i + 1, i + 1));
            break;
        case AlgebraTag::sp:
            // H(e_i) = E_ii - E_{pad(i),pad(i)}, pad(i) = 2l+1-i
            for (int i = 1; i <= l; ++i) h.push_back(unit(n, i, i) - unit(n, 2 * l + 1 - i, 2 * l + 1 - i));
            break;
        case AlgebraTag::so:
            for (int i = 1; i <= l; ++i) h.push_back(unit(n, i, i) - unit(n, l + i, l + i));
            break;
        case AlgebraTag::gl:
            for (int i = 1; i <= n; ++i) h.push_back(unit(n, i, i));
            break;
    }
    return h;
}

FMat torus_element(const AlgebraTag& tag, const DVec<FieldElem>& coords) {
    auto basis = cartan_basis(tag);
    if ((int)basis.size() != coords.size())
        throw Error("torus_element: coordinate length mismatch");
    FMat m = zero(tag.n);
    for (int k = 0; k < coords.size(); ++k) m += coords(k) * basis[k];
    return m;
}

std::vector<FMat> positive_root_vectors(const AlgebraTag& tag) {
    std::vector<FMat> out;
    int n = tag.n, l = n / 2;
    auto pad = [&](int i) { return 2 * l + 1 - i; };
    switch (tag.family) {
        case AlgebraTag::sl:
        case AlgebraTag::gl:
            for (int i = 1; i <= n; ++i) {
                for (int j = i + 1; j <= n; ++j) out.push_back(unit(n, i, j));
            }
            break;
        case AlgebraTag::sp:
            // eps_i - eps_j (i<j), eps_i + eps_j (i<j), 2 eps_i
            for (int i = 1; i <= l; ++i) {
                for (int j = i + 1; j <= l; ++j)
                    out.push_back(unit(n, i, j) - unit(n, pad(j), pad(i)));
            }
            for (int i = 1; i <= l; ++i) {
                for (int j = i + 1; j <= l; ++j)
                    out.push_back(unit(n, i, pad(j)) + unit(n, j, pad(i)));
            }
            for (int i = 1; i <= l; ++i) out.push_back(unit(n, i, pad(i)));
            break;
        case AlgebraTag::so:
            for (int i = 1; i <= l; ++i) {
                for (int j = i + 1; j <= l; ++j)
                    out.push_back(unit(n, i, j) - unit(n, l + j, l + i));
            }
            for (int i = 1; i <= l; ++i) {
                for (int j = i + 1; j <= l; ++j)
                    out.push_back(unit(n, i, l + j) - unit(n, j, l + i));
            }
            break;
    }
    return out;
}

std::vector<FMat> algebra_basis(const AlgebraTag& tag) {
    std::vector<FMat> basis = cartan_basis(tag);
    for (FMat& x : positive_root_vectors(tag)) {
        basis.push_back(x);
        basis.push_back(x.transpose());
    }
    if ((int)basis.size() != tag.dim())
        throw Error("algebra_basis: dimension mismatch for " + algebra_name(tag));
    return basis;
}

std::vector<ChevalleyPair> simple_root_pairs(const AlgebraTag& tag) {
    std::vector<ChevalleyPair> out;
    int n = tag.n, l = n / 2;
    auto pad = [&](int i) { return 2 * l + 1 - i; };
    auto push = [&](FMat x) { out.push_back({x, x.transpose()}); };
    switch (tag.family) {
        case AlgebraTag::sl:
            for (int i = 1; i < n; ++i) push(unit(n, i, i + 1));
            break;
        case AlgebraTag::sp:
            for (int i = 1; i < l; ++i) push(unit(n, i, i + 1) - unit(n, pad(i + 1), pad(i)));
            push(unit(n, l, pad(l)));  // long root 2 eps_l
            break;
        case AlgebraTag::so:
            for (int i = 1; i < l; ++i) push(unit(n, i, i + 1) - unit(n, l + i + 1, l + i));
            push(unit(n, l - 1, l + l) - unit(n, l, l + l - 1));  // eps_{l-1} + eps_l
            break;
        case AlgebraTag::gl:
            throw UnsupportedKindError("simple_root_pairs: gl has no simple system");
    }
    return out;
}

int ad_kernel_dim(const LieMatrix& x) {
    auto basis = algebra_basis(x.tag);
    int n = x.tag.n, s = (int)basis.size();
    FMat m(n * n, s);
    for (int k = 0; k < s; ++k) {
        FMat br = x.mat * basis[k] - basis[k] * x.mat;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) m(i * n + j, k) = br(i, j);
        }
    }
    return s - exact_rank(std::move(m));
}

uint32_t torus_field_order(int rank) {
    uint32_t m = 1;
    for (uint32_t p : first_primes(rank)) m = std::lcm(m, sqrt_conductor(p));
    return m;
}

TorusSeed generic_torus_seed(Kind kind, int rank, const std::shared_ptr<const CycloField>& f) {
    AlgebraTag tag = algebra_for(kind, rank);
    TorusSeed seed;
    seed.a1.tag = tag;
    std::vector<FieldElem> roots;
    for (uint32_t p : first_primes(rank)) {
        if (f->order() % sqrt_conductor(p) != 0)
            throw ConductorError("generic_torus_seed: field Q(zeta_" + std::to_string(f->order()) +
                                 ") too small for sqrt(" + std::to_string(p) + ")");
        roots.push_back(sqrt_prime(p, f));
    }
    int n = tag.n, l = n / 2;
    FMat a = zero(n);
    if (tag.family == AlgebraTag::sl) {
        FieldElem sum(0);
        for (int i = 0; i < rank; ++i) {
            a(i, i) = roots[i];
            sum += roots[i];
        }
        a(n - 1, n - 1) = -sum;
    } else if (tag.family == AlgebraTag::sp) {
        for (int i = 1; i <= l; ++i) {
            a(i - 1, i - 1) = roots[i - 1];
            a(2 * l - i, 2 * l - i) = -roots[i - 1];  // pad(i) slot
        }
    } else {  // so
        for (int i = 1; i <= l; ++i) {
            a(i - 1, i - 1) = roots[i - 1];
            a(l + i - 1, l + i - 1) = -roots[i - 1];
        }
    }
    seed.a1.mat = std::move(a);
    if (!algebra_member(seed.a1.mat, tag)) throw Error("generic_torus_seed: membership failed");
    std::vector<FieldElem> cert{FieldElem::from_rat(f, Rat(1))};
    for (auto& r : roots) cert.push_back(r);
    seed.certificate_rank = q_linear_rank(cert);
    seed.independent_eigenvalues = std::move(roots);
    return seed;
}

LieMatrix principal_nilpotent(Kind kind, int rank) {
    AlgebraTag tag = algebra_for(kind, rank);
    FMat u = zero(tag.n);
    for (const FMat& v : positive_root_vectors(tag)) u += v;
    // nilpotency is structural; check it anyway
    FMat pw = u;
    for (int k = 1; k < tag.n; ++k) pw = pw * u;
    for (int i = 0; i < tag.n; ++i) {
        for (int j = 0; j < tag.n; ++j) {
            if (!pw(i, j).is_zero()) throw Error("principal_nilpotent: not nilpotent");
        }
    }
    if (!algebra_member(u, tag)) throw Error("principal_nilpotent: membership failed");
    return {u, tag};
}

LaurentSeed irregular_seed(Kind kind, int rank) {
    if (kind != Kind::A && kind != Kind::C)
        throw UnsupportedKindError("irregular_seed: supported for types A and C only");
    AlgebraTag tag = algebra_for(kind, rank);
    int n = tag.n;
    FMat a01 = zero(n), a02 = zero(n);
    if (kind == Kind::A) {
        for (int i = 1; i < n; ++i) a01(i, i - 1) = FieldElem(1);
        a02(0, n - 1) = FieldElem(1);
    } else {
        int l = rank;
        // A_{0,1} = [[U, 0], [V, -U]] with U subdiagonal and V = E_{1,l};
        // the corner sign (-1)^{l-1} makes the cycle product +1 so that the
        // eigenvalues are exactly the 2l-th roots of unity.
        for (int i = 1; i < l; ++i) {
            a01(i, i - 1) = FieldElem(1);           // U
            a01(l + i, l + i - 1) = FieldElem(-1);  // -U
        }
        a01(l, l - 1) = FieldElem(1);  // V in the lower-left block
        a02(0, 2 * l - 1) = FieldElem(rank % 2 == 1 ? 1 : -1);
    }
    if (!algebra_member(a01, tag) || !algebra_member(a02, tag))
        throw Error("irregular_seed: membership failed");
    FMat total = a01 + a02;
    Poly<FieldElem> cp = charpoly(total);
    Poly<FieldElem> expect;
    expect.c.assign(n + 1, FieldElem(0));
    expect.c[0] = FieldElem(-1);
    expect.c[n] = FieldElem(1);
    if (!(cp == expect))
        throw Error("irregular_seed: characteristic polynomial is not lambda^n - 1");
    LaurentSeed seed;
    seed.tag = tag;
    seed.terms.emplace(-2, std::move(a01));
    seed.terms.emplace(-1, std::move(a02));
    return seed;
}

}  // namespace diffgal
