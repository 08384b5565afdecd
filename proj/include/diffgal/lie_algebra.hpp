#pragma once

#include <map>
#include <memory>
#include <vector>

#include "diffgal/cyclotomic.hpp"
#include "diffgal/linalg.hpp"
#include "diffgal/root_system.hpp"

namespace diffgal {

using FMat = DMat<FieldElem>;

// Matrix realizations: sl(n) trace zero; sp(2l) for J = [[0,K],[-K,0]] with K
// the exchange matrix; so(2l) for Q = [[0,I],[I,0]].  Both choices keep the
// diagonal Cartan subalgebra diagonal and admit the subdiagonal seed shapes.
struct AlgebraTag {
    enum Family { sl, sp, so, gl };
    Family family = gl;
    int n = 0;

    int rank() const;
    int dim() const;
    bool operator==(const AlgebraTag& o) const { return family == o.family && n == o.n; }
};

AlgebraTag algebra_for(Kind kind, int rank);
std::string algebra_name(const AlgebraTag& tag);

struct LieMatrix {
    FMat mat;
    AlgebraTag tag;
};

// Defining bilinear identity of the family (exact): trace for sl, X^T S + S X
// for sp/so, nothing for gl.
bool algebra_member(const FMat& x, const AlgebraTag& tag);
// The form matrix S over Q; empty for sl/gl.
FMat algebra_form(const AlgebraTag& tag);

// Deterministic ordered basis: Cartan part first, then root vectors.
std::vector<FMat> algebra_basis(const AlgebraTag& tag);
// Basis of the diagonal Cartan subalgebra, rank() many elements; coordinates
// in this basis parameterize the torus.
std::vector<FMat> cartan_basis(const AlgebraTag& tag);
FMat torus_element(const AlgebraTag& tag, const DVec<FieldElem>& coords);

// Root vectors for the simple roots (Bourbaki order) and their transposed
// negatives, normalized as Chevalley pairs.
struct ChevalleyPair {
    FMat x, y;
};
std::vector<ChevalleyPair> simple_root_pairs(const AlgebraTag& tag);
// All positive-root vectors, simple roots first.
std::vector<FMat> positive_root_vectors(const AlgebraTag& tag);

// Dimension over the constants of the centralizer of X inside its algebra.
int ad_kernel_dim(const LieMatrix& x);

// Condition 2 seed: diagonal with l multiplicatively independent eigenvalues,
// the square roots of the first l primes; emitted as A1 / t.
struct TorusSeed {
    LieMatrix a1;
    std::vector<FieldElem> independent_eigenvalues;  // r_1..r_l
    int certificate_rank = 0;                        // q_linear_rank({1, r_1..r_l})
};
TorusSeed generic_torus_seed(Kind kind, int rank, const std::shared_ptr<const CycloField>& f);
// Conductor lcm needed by generic_torus_seed at this rank.
uint32_t torus_field_order(int rank);

// Condition 3 seed: sum of all positive-root vectors (principal nilpotent;
// the all-ones strictly upper matrix for sl); emitted as A2 / t.
LieMatrix principal_nilpotent(Kind kind, int rank);

// Laurent-polynomial seed at a point: t-exponent -> coefficient.
struct LaurentSeed {
    AlgebraTag tag;
    std::map<int, FMat> terms;
};

// Condition 1 seed for types A and C: A_{0,1}/t^2 + A_{0,2}/t with
// A_{0,1} + A_{0,2} of characteristic polynomial lambda^n - 1 (verified).
LaurentSeed irregular_seed(Kind kind, int rank);

}  // namespace diffgal
