#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "diffgal/root_system.hpp"

namespace diffgal {

// A permutation of {0, ..., m-1} by its image table.
struct Perm {
    std::vector<uint16_t> img;

    int size() const { return (int)img.size(); }
    bool operator==(const Perm& o) const { return img == o.img; }
};

Perm perm_identity(int m);
// Left-to-right composition: apply a first, then b.
Perm perm_compose(const Perm& a, const Perm& b);
bool perm_is_involution(const Perm& p);
bool perm_is_identity(const Perm& p);

// Partition of m given by the cycle structure, parts sorted descending.
using CycleType = std::vector<int>;
CycleType cycle_type(const Perm& p);

// The permutation each simple reflection induces on the orbit labels.
std::vector<Perm> reflection_perms(const RootSystem& rs, const WeightOrbit& orbit);

// Product of generators along a word of 1-based generator indices, applied
// left to right.
Perm word_perm(const std::vector<Perm>& gens, const std::vector<int>& word);

struct CycleTypeEntry {
    CycleType parts;
    std::vector<int> witness_word;  // 1-based generator indices, BFS-first
};

struct EnumerationResult {
    uint64_t group_order = 0;
    std::vector<CycleTypeEntry> types;  // in order of first BFS appearance
};

struct EnumLimits {
    // Memory budget for the element arena and bookkeeping; the default reads
    // DIFFGAL_ENUM_MEM_MB and falls back to 1 GiB.
    uint64_t max_bytes;
    EnumLimits();
};

// Exhaustive breadth-first closure of the group generated by gens, recording
// each distinct cycle type with its first witness word and the exact group
// order.  Throws EnumCapError when the memory budget would be exceeded.
EnumerationResult enumerate_cycle_types(const std::vector<Perm>& gens,
                                        const EnumLimits& limits = EnumLimits());

// All achievable sub-multiset sums of the parts, 0 and m included.
std::vector<int> invariant_sums(const CycleType& ct);

struct TransitivityCertificate {
    bool ok = false;
    // For each i in 1..m-1 (index i-1), an index into the tested cycle-type
    // list whose invariant sums miss i.
    std::vector<int> witness_type;
    int blocking_i = 0;  // smallest i with no witness, when !ok
};

std::pair<bool, TransitivityCertificate> is_strictly_transitive(const std::vector<CycleType>& cts,
                                                                int m);
// Re-derives the verdict from the certificate without trusting the search.
bool replay_certificate(const TransitivityCertificate& cert, const std::vector<CycleType>& cts,
                        int m);

struct StrictSearchResult {
    int orbit_size = 0;
    EnumerationResult enumeration;
    bool exists = false;  // some subset of the occurring types is strictly transitive
    TransitivityCertificate full_set_certificate;
    std::vector<std::vector<int>> minimal_sets;  // indices into enumeration.types
    int searched_up_to = 0;
};

// Exhaustive search over subsets of the occurring cycle types, up to
// max_set_size (0 = all sizes).  Monotonicity makes the full-set test an
// unconditional existence criterion; minimal witnesses are enumerated in
// increasing size.
StrictSearchResult find_strictly_transitive(Kind kind, int rank, const Weight& highest,
                                            int max_set_size = 0,
                                            const EnumLimits& limits = EnumLimits());

}  // namespace diffgal
