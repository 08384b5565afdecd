#pragma once

#include "diffgal/puiseux.hpp"

namespace diffgal {

// A finite-order element normalizing the diagonal torus, together with the
// automorphism it induces on the Cartan subalgebra.
struct ToricWitness {
    AlgebraTag tag;
    std::shared_ptr<const CycloField> field;
    FMat g;                        // signed-permutation matrix in the group
    int order = 1;                 // m'
    DMat<FieldElem> dphi;          // conjugation action on cartan coordinates
    int dphi_order = 1;            // m
};

// Order lcm(orders of g and dphi eigenvalue denominators) the field must
// contain for the local constructions at this witness.
uint32_t witness_field_order(Kind kind, int rank, const std::vector<int>& word);

// Lifts a Weyl word (1-based simple-root indices) to the standard matrix
// representation via the Chevalley lifts exp(x) exp(-y) exp(x).  Implemented
// for types A, C, D.
ToricWitness weyl_lift(Kind kind, int rank, const std::vector<int>& word,
                       const std::shared_ptr<const CycloField>& f);

// eta with eta^{gamma'} = eta * g, built from the signed-permutation cycle
// decomposition of g; exponents are chosen so eta lands in SL / Sp / SO,
// which makes the glued model stay in the algebra.
struct Hilbert90 {
    PuiseuxMatrix eta, eta_inv;
    // log-derivative eta' eta^{-1}, a single t^{-1} term
    PuiseuxMatrix eta_logderiv;
};
Hilbert90 hilbert90_eta(const ToricWitness& w);

// The torus equation: Atilde = sum_q z^{-q/m} sum_j z^{-j-1} b_{j,q} with
// b_{j,q} ranging over a basis of the dphi eigenspace paired so that
// Atilde^gamma = dphi(Atilde) holds exactly (verified).
PuiseuxMatrix toric_equation(const ToricWitness& w);

// Applies dphi to every coefficient of a torus-valued series.
PuiseuxMatrix apply_dphi(const ToricWitness& w, const PuiseuxMatrix& a);

// The glued local model Abar = eta' eta^{-1} + eta Atilde eta^{-1}, truncated
// at q_trunc (default: keep everything up to t^0).  All fractional exponents
// must cancel; that and algebra membership are verified.
struct ToricModel {
    LaurentSeed seed;
    PuiseuxMatrix abar;  // the exact untruncated model
};
ToricModel toric_model(const ToricWitness& w, int q_trunc = 0);
// Same gluing from explicitly given eta and Atilde (fixture replay).
ToricModel toric_model_from(const ToricWitness& w, const PuiseuxMatrix& eta,
                            const PuiseuxMatrix& eta_inv, const PuiseuxMatrix& atilde,
                            int q_trunc = 0);

}  // namespace diffgal
