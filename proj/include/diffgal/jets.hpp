#pragma once

#include "diffgal/equivariant.hpp"

namespace diffgal {

// Prescribed local principal parts at one curve point (x, root), root^n = x:
// the expansion of A in t = x - x0 must equal coeffs[k] for lo <= k <= hi
// (missing orders are zero matrices).
struct JetPoint {
    FieldElem x, root;
    int lo = -1, hi = -1;
    std::map<int, FMat> coeffs;
    std::string role;           // torus | nilpotent | irregular | toric | plain
    std::vector<int> toric_word;  // replay data for toric points
};

struct JetSpec {
    std::vector<JetPoint> points;
};

struct Interpolation {
    KMat a;                   // A = sum_j f_j * e~_j, equivariant by construction
    std::vector<RatFunc> f;   // the coefficient functions
};

// Builds an equivariant matrix with the prescribed jets by one exact linear
// solve over an ansatz of pole terms at the marked points plus a polynomial
// part, then re-verifies every jet by an independent expansion pass.
Interpolation interpolate_jets(const EquivariantBasis& basis, const JetSpec& spec);

// Lie-algebra membership over K (trace / bilinear identity with K entries).
bool algebra_member(const KMat& x, const AlgebraTag& tag);

}  // namespace diffgal
