#pragma once

#include "diffgal/jets.hpp"
#include "diffgal/local_model.hpp"

namespace diffgal {

struct PointInput {
    Rat x;
    std::optional<Rat> root;  // branch of x^{1/n}; derived when rational
};

struct FactorSpec {
    Kind kind;
    int rank;
};

// The assembled system Y' = A Y over K = F(x, x^{1/n}), block-diagonal by
// factor, with the per-factor jet prescriptions that produced it.
struct SystemRecord {
    std::shared_ptr<const CycloField> field;
    int ext_n = 1;
    ActionSpec action;
    std::vector<FactorSpec> factors;
    std::vector<JetSpec> factor_jets;
    std::vector<KMat> blocks;
    KMat a;  // block diagonal

    int total_dim() const;
    AlgebraTag factor_tag(size_t i) const { return algebra_for(factors[i].kind, factors[i].rank); }
};

// Seed plan per factor: types A and C take three points in role order
// irregular, torus, nilpotent; type D takes four points in role order
// toric (word 1..l-1), toric (word 1..l), torus, nilpotent.
int points_needed(Kind kind);

// Smallest cyclotomic order supporting the construction.
uint32_t system_field_order(const std::vector<FactorSpec>& factors, int action_order);

SystemRecord assemble_group_equation(const std::vector<FactorSpec>& factors,
                                     ActionSpec::Type action_type, int action_order,
                                     const std::vector<std::vector<PointInput>>& factor_points,
                                     int q_trunc = 0);

// The worked sl2 system over C(x, sqrt x) with points (4,2), (9,3), (16,4):
// irregular double pole, sqrt-2 torus residue and nilpotent residue.
SystemRecord build_sl2_sqrtx();

}  // namespace diffgal
