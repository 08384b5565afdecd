#pragma once

#include "diffgal/assemble.hpp"
#include "diffgal/puiseux.hpp"

namespace diffgal {

struct CheckRecord {
    std::string id;
    std::string status;  // "pass" | "fail" | "not-run"
    std::string evidence;
};

struct VerificationBundle {
    // The bundle certifies the machine-checkable hypotheses; the Galois-group
    // conclusion itself is the cited theorem, not a computation.
    std::string header;
    std::vector<CheckRecord> checks;

    bool all_passed() const;
    const CheckRecord* find(const std::string& id) const;
};

// Expands the system at every marked point and checks the role contracts
// (torus / nilpotent / irregular / toric), the equivariance identity, algebra
// membership over K, the point plan, and cross-factor regularity.
VerificationBundle check_system(const SystemRecord& rec);

enum class Mutation {
    rational_eigenvalues,  // torus residue replaced by diag(1, -1)
    zero_nilpotent,        // nilpotent residue replaced by 0
    point_into_bad_set,    // torus point moved onto the ramification point
    equivariance_sign,     // one sign flipped off the prescribed orders
};

std::string mutation_name(Mutation m);
// The check id the mutation is designed to break.
std::string mutation_target(Mutation m);

// Applies a documented mutation to the worked sl2 system.
SystemRecord mutate_system(const SystemRecord& rec, Mutation m);

}  // namespace diffgal
