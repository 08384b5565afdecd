#include "diffgal/assemble.hpp"

#include <numeric>

namespace diffgal {

int SystemRecord::total_dim() const {
    int n = 0;
    for (size_t i = 0; i < factors.size(); ++i) n += factor_tag(i).n;
    return n;
}

int points_needed(Kind kind) {
    switch (kind) {
        case Kind::A:
        case Kind::C: return 3;
        case Kind::D: return 4;
        default:
            throw UnsupportedKindError("assemble: no matrix construction for type " +
                                       kind_to_string(kind));
    }
}

uint32_t system_field_order(const std::vector<FactorSpec>& factors, int action_order) {
    uint32_t m = std::lcm(4u, (uint32_t)action_order);
    for (const auto& f : factors) {
        m = std::lcm(m, torus_field_order(f.rank));
        if (f.kind == Kind::D) {
            std::vector<int> w1, w2;
            for (int i = 1; i <= f.rank - 1; ++i) w1.push_back(i);
            for (int i = 1; i <= f.rank; ++i) w2.push_back(i);
            m = std::lcm(m, witness_field_order(f.kind, f.rank, w1));
            m = std::lcm(m, witness_field_order(f.kind, f.rank, w2));
        }
    }
    return m;
}

namespace {

std::optional<Rat> rational_nth_root(const Rat& x, int n) {
    if (n == 1) return x;
    if (x == 0) return Rat(0);
    auto int_root = [&](Int v) -> std::optional<Int> {
        if (v < 0) return std::nullopt;
        Int lo = 0, hi = v + 1;
        while (lo + 1 < hi) {
            Int mid = (lo + hi) / 2;
            Int p = 1;
            for (int i = 0; i < n && p <= v; ++i) p *= mid;
            if (p <= v) lo = mid;
            else hi = mid;
        }
        Int p = 1;
        for (int i = 0; i < n; ++i) p *= lo;
        if (p == v) return lo;
        return std::nullopt;
    };
    bool neg = x < 0;
    if (neg && n % 2 == 0) return std::nullopt;
    auto rn = int_root(neg ? Int(-rat_num(x)) : rat_num(x));
    auto rd = int_root(rat_den(x));
    if (!rn || !rd) return std::nullopt;
    Rat r(*rn, *rd);
    return neg ? -r : r;
}

JetSpec factor_jet_spec(const FactorSpec& fs, const std::vector<PointInput>& pts, int n_ext,
                        const std::shared_ptr<const CycloField>& f, int q_trunc) {
    if ((int)pts.size() != points_needed(fs.kind))
        throw BadPointError("assemble: type " + kind_to_string(fs.kind) + std::to_string(fs.rank) +
                            " needs " + std::to_string(points_needed(fs.kind)) + " points");
    auto resolve = [&](const PointInput& p) -> std::pair<FieldElem, FieldElem> {
        FieldElem x = FieldElem::from_rat(f, p.x);
        Rat root;
        if (p.root) {
            root = *p.root;
            Rat pw(1);
            for (int i = 0; i < n_ext; ++i) pw *= root;
            if (!(pw == p.x)) throw BadPointError("assemble: root^n != x for a supplied branch");
        } else {
            auto r = rational_nth_root(p.x, n_ext);
            if (!r)
                throw BadPointError("assemble: point " + rat_num(p.x).str() +
                                    "/... has no rational " + std::to_string(n_ext) +
                                    "-th root; supply one as x:root");
            root = *r;
        }
        return {x, FieldElem::from_rat(f, root)};
    };

    JetSpec spec;
    size_t cursor = 0;
    auto add_point = [&](const std::string& role, int lo, int hi, std::map<int, FMat> coeffs,
                         std::vector<int> word = {}) {
        auto [x, root] = resolve(pts[cursor++]);
        spec.points.push_back({x, root, lo, hi, std::move(coeffs), role, std::move(word)});
    };

    if (fs.kind == Kind::A || fs.kind == Kind::C) {
        LaurentSeed irr = irregular_seed(fs.kind, fs.rank);
        std::map<int, FMat> coeffs(irr.terms.begin(), irr.terms.end());
        add_point("irregular", -2, -1, std::move(coeffs));
    } else {
        std::vector<int> w1, w2;
        for (int i = 1; i <= fs.rank - 1; ++i) w1.push_back(i);
        for (int i = 1; i <= fs.rank; ++i) w2.push_back(i);
        for (auto& word : {w1, w2}) {
            auto witness = weyl_lift(fs.kind, fs.rank, word, f);
            auto model = toric_model(witness, q_trunc);
            std::map<int, FMat> coeffs(model.seed.terms.begin(), model.seed.terms.end());
            int lo = coeffs.begin()->first;
            add_point("toric", lo, q_trunc, std::move(coeffs), word);
        }
    }
    {
        auto torus = generic_torus_seed(fs.kind, fs.rank, f);
        if (torus.certificate_rank != fs.rank + 1)
            throw Error("assemble: torus independence certificate failed");
        add_point("torus", -1, -1, {{-1, torus.a1.mat}});
    }
    {
        auto nil = principal_nilpotent(fs.kind, fs.rank);
        // lift the rational entries into the run's field
        FMat m = nil.mat;
        add_point("nilpotent", -1, -1, {{-1, std::move(m)}});
    }
    return spec;
}

}  // namespace

SystemRecord assemble_group_equation(const std::vector<FactorSpec>& factors,
                                     ActionSpec::Type action_type, int action_order,
                                     const std::vector<std::vector<PointInput>>& factor_points,
                                     int q_trunc) {
    if (factors.empty()) throw BadPointError("assemble: no factors");
    if (factor_points.size() != factors.size())
        throw BadPointError("assemble: one point list per factor required");
    if (action_type != ActionSpec::trivial && factors.size() > 1)
        throw UnsupportedKindError("assemble: nontrivial actions are supported for single factors");

    SystemRecord rec;
    rec.factors = factors;
    rec.ext_n = (action_type == ActionSpec::trivial) ? 1 : action_order;
    rec.field = CycloField::make(system_field_order(factors, rec.ext_n));
    switch (action_type) {
        case ActionSpec::trivial: rec.action = ActionSpec::make_trivial(); break;
        case ActionSpec::transpose_negate:
            if (action_order != 2)
                throw BadPointError("assemble: the transpose-inverse action has order 2");
            rec.action = ActionSpec::make_transpose_negate();
            break;
        default:
            throw UnsupportedKindError("assemble: pass conjugation actions through the library API");
    }

    // pairwise distinct projections across all factors
    {
        std::vector<Rat> all;
        for (auto& pts : factor_points) {
            for (auto& p : pts) all.push_back(p.x);
        }
        std::sort(all.begin(), all.end());
        if (std::adjacent_find(all.begin(), all.end()) != all.end())
            throw BadPointError("assemble: point projections must be pairwise distinct");
    }

    for (size_t i = 0; i < factors.size(); ++i) {
        rec.factor_jets.push_back(
            factor_jet_spec(factors[i], factor_points[i], rec.ext_n, rec.field, q_trunc));
    }
    for (size_t i = 0; i < factors.size(); ++i) {
        auto basis = equivariant_basis(rec.factor_tag(i), rec.action, rec.field);
        rec.blocks.push_back(interpolate_jets(basis, rec.factor_jets[i]).a);
    }
    int n = rec.total_dim();
    rec.a = KMat(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) rec.a(i, j) = KummerElem(0);
    }
    int off = 0;
    for (size_t i = 0; i < factors.size(); ++i) {
        int d = rec.factor_tag(i).n;
        for (int r = 0; r < d; ++r) {
            for (int c = 0; c < d; ++c) rec.a(off + r, off + c) = rec.blocks[i](r, c);
        }
        off += d;
    }
    return rec;
}

SystemRecord build_sl2_sqrtx() {
    return assemble_group_equation({{Kind::A, 1}}, ActionSpec::transpose_negate, 2,
                                   {{{Rat(4), std::nullopt},
                                     {Rat(9), std::nullopt},
                                     {Rat(16), std::nullopt}}});
}

}  // namespace diffgal
