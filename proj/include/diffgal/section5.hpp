#pragma once

#include "diffgal/ratfunc.hpp"

namespace diffgal {

// The degree argument behind the W x SL2 construction: with
// A = n(z^{n-2} e + z^n f + z^{3n-1} h), a polynomial solution
// w = p u + q v of w' = n[z^{n-2} e + z^n f + z^{3n-1} h - c I] w with
// deg p, q <= m forces w = 0 for both leading-coefficient branches
// (w_m = u, c_{3n-1} = 1) and (w_m = v, c_{3n-1} = -1).
struct AlternateBranchReport {
    std::string branch;    // "u,+1" or "v,-1"
    int m = 0;
    int deg_q = 0;         // m - 2n + 1 (negative: q forced to zero)
    int null_dim = 0;      // solution-space dimension in the forced-c branch
    bool forced_c = true;  // degree bookkeeping pins c = +-z^{3n-1}
    bool only_zero = false;
};

struct AlternateReport {
    int n = 0;
    int m_max = 0;
    std::vector<AlternateBranchReport> branches;
    bool passed = false;  // every branch and degree forces w = 0
};

AlternateReport alternate_sl2_check(int n, int m_max);

// Symbolic checks of the section's change of variables and equivariance:
// x = z^n turns Y' = Atilde Y into dY/dz = n(z^{n-2}e + z^n f + z^{3n-1}h) Y,
// and Atilde = x^{-1/n} e + x^{1/n} f + x^2 h satisfies the equivariance
// identity for the root-character scaling of the cyclic action.
struct Section5Report {
    bool substitution_ok = false;
    bool equivariance_ok = false;
};

Section5Report check_section5_equation(int n);

}  // namespace diffgal
