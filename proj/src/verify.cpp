#include "diffgal/verify.hpp"

#include <sstream>

namespace diffgal {

bool VerificationBundle::all_passed() const {
    for (const auto& c : checks) {
        if (c.status == "fail") return false;
    }
    return true;
}

const CheckRecord* VerificationBundle::find(const std::string& id) const {
    for (const auto& c : checks) {
        if (c.id == id) return &c;
    }
    return nullptr;
}

namespace {

std::string fmt_matrix(const FMat& m) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).str();
    }
    os << "]";
    return os.str();
}

bool matrix_is_diagonalish(const FMat& m, std::vector<FieldElem>& eigs) {
    int n = (int)m.rows();
    bool lower = true, upper = true;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i < j && !m(i, j).is_zero()) lower = false;
            if (i > j && !m(i, j).is_zero()) upper = false;
        }
    }
    if (!lower && !upper) return false;
    for (int i = 0; i < n; ++i) eigs.push_back(m(i, i));
    return true;
}

struct Checker {
    const SystemRecord& rec;
    VerificationBundle& bundle;

    void record(const std::string& id, bool ok, const std::string& evidence) {
        bundle.checks.push_back({id, ok ? "pass" : "fail", evidence});
    }
    void not_run(const std::string& id, const std::string& why) {
        bundle.checks.push_back({id, "not-run", why});
    }

    template <class Fn>
    void guarded(const std::string& id, Fn&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            bundle.checks.push_back({id, "fail", e.what()});
        }
    }
};

}  // namespace

VerificationBundle check_system(const SystemRecord& rec) {
    VerificationBundle bundle;
    bundle.header =
        "certifies the machine-checkable hypotheses (local role contracts, equivariance, "
        "membership); the Galois-group conclusion is the theorem applied to them";
    Checker ck{rec, bundle};

    if (rec.factors.size() != rec.blocks.size() || rec.factors.size() != rec.factor_jets.size()) {
        bundle.checks.push_back({"record.shape", "fail", "inconsistent record"});
        return bundle;
    }

    // point plan: pairwise distinct projections, valid branches, bad sets
    {
        bool distinct = true;
        std::vector<FieldElem> seen;
        for (const auto& js : rec.factor_jets) {
            for (const auto& pt : js.points) {
                for (const auto& s : seen) {
                    if (s == pt.x) distinct = false;
                }
                seen.push_back(pt.x);
            }
        }
        ck.record("points.distinct", distinct, std::to_string(seen.size()) + " points");
    }
    for (size_t fi = 0; fi < rec.factors.size(); ++fi) {
        auto tag = rec.factor_tag(fi);
        EquivariantBasis basis;
        bool basis_ok = true;
        try {
            basis = equivariant_basis(tag, rec.action, rec.field);
        } catch (const Error& e) {
            basis_ok = false;
            ck.record("factor" + std::to_string(fi) + ".basis", false, e.what());
        }
        for (size_t pi = 0; basis_ok && pi < rec.factor_jets[fi].points.size(); ++pi) {
            const auto& pt = rec.factor_jets[fi].points[pi];
            auto bad = basis.bad_point(pt.x, pt.root);
            ck.record("factor" + std::to_string(fi) + ".point" + std::to_string(pi) + ".plan",
                      !bad.bad, bad.bad ? bad.reason : "outside the bad set");
        }
    }

    int off = 0;
    for (size_t fi = 0; fi < rec.factors.size(); ++fi) {
        const auto tag = rec.factor_tag(fi);
        const KMat& block = rec.blocks[fi];
        const std::string fpre = "factor" + std::to_string(fi) + ".";
        const int l = rec.factors[fi].rank;

        ck.record(fpre + "block-matches-matrix", [&] {
            for (int i = 0; i < tag.n; ++i) {
                for (int j = 0; j < tag.n; ++j) {
                    if (!(rec.a(off + i, off + j) == block(i, j))) return false;
                }
            }
            return true;
        }(), "");

        ck.record(fpre + "membership", algebra_member(block, tag), algebra_name(tag));
        ck.guarded(fpre + "equivariance", [&] {
            ck.record(fpre + "equivariance",
                      is_equivariant(block, rec.action, rec.ext_n, rec.field), "");
        });

        for (size_t pi = 0; pi < rec.factor_jets[fi].points.size(); ++pi) {
            const auto& pt = rec.factor_jets[fi].points[pi];
            const std::string pre = fpre + "point" + std::to_string(pi) + ".";
            std::map<int, FMat> exp;
            try {
                exp = laurent_expand_matrix(block, pt.x, pt.root, std::max(pt.hi, 0));
            } catch (const Error& e) {
                ck.not_run(pre + pt.role, std::string("expansion blocked: ") + e.what());
                continue;
            }
            int val = exp.empty() ? 0 : exp.begin()->first;

            if (pt.role == "torus") {
                if (val < -1) {
                    ck.record(pre + "torus-pole-order", false, "pole order > 1");
                    continue;
                }
                FMat residue = exp.count(-1) ? exp.at(-1) : FMat::Constant(tag.n, tag.n, FieldElem(0));
                // semisimple: the squarefree part of the charpoly annihilates
                Poly<FieldElem> cp = charpoly(residue);
                Poly<FieldElem> sf = divrem(cp, poly_gcd(cp, derivative(cp))).first;
                FMat ev = FMat::Constant(tag.n, tag.n, FieldElem(0));
                {
                    // evaluate sf at the residue matrix
                    for (int i = 0; i < tag.n; ++i) ev(i, i) = FieldElem(sf.coeff(sf.degree()));
                    for (int d = sf.degree() - 1; d >= 0; --d) {
                        ev = (ev * residue).eval();
                        for (int i = 0; i < tag.n; ++i) ev(i, i) += sf.coeff(d);
                    }
                }
                bool semisimple = true;
                for (int i = 0; i < tag.n; ++i) {
                    for (int j = 0; j < tag.n; ++j) {
                        if (!ev(i, j).is_zero()) semisimple = false;
                    }
                }
                ck.record(pre + "torus-residue-semisimple", semisimple, fmt_matrix(residue));
                std::vector<FieldElem> eigs;
                if (!matrix_is_diagonalish(residue, eigs)) {
                    ck.record(pre + "torus-independence", false,
                              "unsupported non-triangular residue: eigenvalues not extractable");
                } else {
                    std::vector<FieldElem> cert{FieldElem::from_rat(rec.field, Rat(1))};
                    for (auto& e : eigs) cert.push_back(embed(e, rec.field));
                    int rank = q_linear_rank(cert);
                    ck.record(pre + "torus-independence", rank == l + 1,
                              "rank " + std::to_string(rank) + ", need " + std::to_string(l + 1));
                }
            } else if (pt.role == "nilpotent") {
                if (val < -1) {
                    ck.record(pre + "nilpotent-pole-order", false, "pole order > 1");
                    continue;
                }
                FMat residue = exp.count(-1) ? exp.at(-1) : FMat::Constant(tag.n, tag.n, FieldElem(0));
                FMat pw = residue;
                for (int k = 1; k < tag.n; ++k) pw = (pw * residue).eval();
                bool nil = true;
                for (int i = 0; i < tag.n; ++i) {
                    for (int j = 0; j < tag.n; ++j) {
                        if (!pw(i, j).is_zero()) nil = false;
                    }
                }
                ck.record(pre + "nilpotent-residue", nil, fmt_matrix(residue));
                int dim = ad_kernel_dim({residue, tag});
                ck.record(pre + "nilpotent-ad-kernel", dim == l,
                          "dim " + std::to_string(dim) + ", need " + std::to_string(l));
            } else if (pt.role == "irregular") {
                ck.guarded(pre + "irregular-slope", [&] {
                    LaurentSeed seed;
                    seed.tag = tag;
                    for (auto& [k, c] : exp) {
                        if (k <= -1) seed.terms.emplace(k, c);
                    }
                    auto slope = unique_slope(seed);
                    std::ostringstream ev2;
                    ev2 << "slope " << slope.slope;
                    ck.record(pre + "irregular-slope", slope.irregular, ev2.str());
                });
            } else if (pt.role == "toric") {
                ck.guarded(pre + "toric-replay", [&] {
                    auto witness = weyl_lift(rec.factors[fi].kind, rec.factors[fi].rank,
                                             pt.toric_word, rec.field);
                    hilbert90_eta(witness);        // eta^{gamma'} = eta g, form identity
                    toric_equation(witness);       // Atilde^gamma = dphi(Atilde)
                    auto model = toric_model(witness, pt.hi);
                    bool match = true;
                    for (int m = pt.lo; m <= pt.hi; ++m) {
                        FMat want = model.seed.terms.count(m)
                                        ? model.seed.terms.at(m)
                                        : FMat::Constant(tag.n, tag.n, FieldElem(0));
                        FMat got = exp.count(m) ? exp.at(m)
                                                : FMat::Constant(tag.n, tag.n, FieldElem(0));
                        for (int i = 0; i < tag.n; ++i) {
                            for (int j = 0; j < tag.n; ++j) {
                                if (!(want(i, j) == got(i, j))) match = false;
                            }
                        }
                    }
                    ck.record(pre + "toric-replay", match,
                              "order " + std::to_string(witness.order) + ", dphi order " +
                                  std::to_string(witness.dphi_order));
                });
            }
        }

        // regularity at the other factors' points
        for (size_t fj = 0; fj < rec.factors.size(); ++fj) {
            if (fj == fi) continue;
            for (size_t pj = 0; pj < rec.factor_jets[fj].points.size(); ++pj) {
                const auto& pt = rec.factor_jets[fj].points[pj];
                const std::string id = fpre + "regular-at-factor" + std::to_string(fj) + ".point" +
                                       std::to_string(pj);
                try {
                    auto exp = laurent_expand_matrix(block, pt.x, pt.root, -1);
                    ck.record(id, exp.empty(), exp.empty() ? "" : "singular");
                } catch (const Error& e) {
                    ck.not_run(id, e.what());
                }
            }
        }
        off += tag.n;
    }
    return bundle;
}

std::string mutation_name(Mutation m) {
    switch (m) {
        case Mutation::rational_eigenvalues: return "rational-eigenvalues";
        case Mutation::zero_nilpotent: return "zero-nilpotent";
        case Mutation::point_into_bad_set: return "point-into-bad-set";
        case Mutation::equivariance_sign: return "equivariance-sign";
    }
    return "?";
}

std::string mutation_target(Mutation m) {
    switch (m) {
        case Mutation::rational_eigenvalues: return "factor0.point1.torus-independence";
        case Mutation::zero_nilpotent: return "factor0.point2.nilpotent-ad-kernel";
        case Mutation::point_into_bad_set: return "factor0.point1.plan";
        case Mutation::equivariance_sign: return "factor0.equivariance";
    }
    return "?";
}

SystemRecord mutate_system(const SystemRecord& rec, Mutation m) {
    SystemRecord out = rec;
    switch (m) {
        case Mutation::rational_eigenvalues: {
            // re-prescribe the torus residue as diag(1, -1, ...): still
            // semisimple and traceless, but rationally dependent eigenvalues
            auto& pt = out.factor_jets[0].points[1];
            int n = out.factor_tag(0).n;
            FMat d = FMat::Constant(n, n, FieldElem(0));
            for (int i = 0; i < n; ++i) d(i, i) = FieldElem(i % 2 == 0 ? 1 : -1);
            if (n % 2 == 1) d(n - 1, n - 1) = FieldElem(0);
            pt.coeffs[-1] = d;
            break;
        }
        case Mutation::zero_nilpotent: {
            auto& pt = out.factor_jets[0].points[2];
            int n = out.factor_tag(0).n;
            pt.coeffs[-1] = FMat::Constant(n, n, FieldElem(0));
            break;
        }
        case Mutation::point_into_bad_set: {
            auto& pt = out.factor_jets[0].points[1];
            pt.x = FieldElem::from_rat(rec.field, Rat(0));
            pt.root = FieldElem::from_rat(rec.field, Rat(0));
            return out;  // matrix deliberately left as-is
        }
        case Mutation::equivariance_sign: {
            // add an equivariance-breaking term vanishing to high order at
            // every marked point, so only the identity check can see it
            RatFunc x = RatFunc::x();
            RatFunc poly(1);
            for (const auto& pt : rec.factor_jets[0].points) {
                RatFunc lin = x - RatFunc(KummerElem(pt.x).rational_part());
                poly *= lin * lin;
            }
            KummerElem delta = KummerElem::root_power(rec.ext_n, 1) * KummerElem(poly);
            out.a(0, 1) += delta;
            out.blocks[0](0, 1) += delta;
            return out;
        }
    }
    // mutations that change jets re-interpolate, keeping everything else
    auto basis = equivariant_basis(out.factor_tag(0), out.action, out.field);
    out.blocks[0] = interpolate_jets(basis, out.factor_jets[0]).a;
    int d0 = out.factor_tag(0).n;
    for (int i = 0; i < d0; ++i) {
        for (int j = 0; j < d0; ++j) out.a(i, j) = out.blocks[0](i, j);
    }
    return out;
}

}  // namespace diffgal
