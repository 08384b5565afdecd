#pragma once

#include "diffgal/lie_algebra.hpp"
#include "diffgal/ratfunc.hpp"

namespace diffgal {

// Cyclic action of order n on the algebra over the constants: the generator
// acts by v -> S v S^{-1} for a fixed finite-order S, by v -> -v^T (the
// transpose-negate action on sl), or trivially (n = 1).
struct ActionSpec {
    enum Type { trivial, transpose_negate, conjugation };
    Type type = trivial;
    int order = 1;
    FMat s;  // only for conjugation

    static ActionSpec make_trivial();
    static ActionSpec make_transpose_negate();
    static ActionSpec make_conjugation(FMat s, int order);
};

FMat apply_action(const ActionSpec& act, const FMat& v);
KMat apply_action(const ActionSpec& act, const KMat& v);

// sigma(A): the Galois generator applied to the entries.
KMat apply_galois(const KMat& a, int64_t k, int n, const std::shared_ptr<const CycloField>& f);

// The equivariance identity: applying the field generator to the entries
// equals acting on the matrix, sigma(A) = rho(A).
bool is_equivariant(const KMat& a, const ActionSpec& act, int n,
                    const std::shared_ptr<const CycloField>& f);

struct BadSetReason {
    bool bad = false;
    std::string reason;
};

struct EquivariantBasis {
    AlgebraTag tag;
    ActionSpec action;
    int n = 1;  // Kummer ramification
    std::shared_ptr<const CycloField> field;
    std::vector<KMat> elems;  // dim(tag) elements
    KMat change_of_basis;     // columns: coordinates of elems in the standard basis
    KummerElem det_b;

    BadSetReason bad_point(const FieldElem& x, const FieldElem& root) const;
};

// Constructs an equivariant basis by decomposing the action into eigenspaces
// and weighting the eigenvectors with the matching powers of x^{1/n}.
EquivariantBasis equivariant_basis(const AlgebraTag& tag, const ActionSpec& act,
                                   const std::shared_ptr<const CycloField>& f);

// Wraps externally supplied basis elements (printed fixtures); computes the
// change of basis and determinant, and checks the equivariance identity.
EquivariantBasis equivariant_basis_from(const AlgebraTag& tag, const ActionSpec& act,
                                        const std::shared_ptr<const CycloField>& f,
                                        std::vector<KMat> elems);

}  // namespace diffgal
