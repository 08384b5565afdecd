#include "diffgal/weyl_perm.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>

namespace diffgal {

Perm perm_identity(int m) {
    Perm p;
    p.img.resize(m);
    for (int i = 0; i < m; ++i) p.img[i] = (uint16_t)i;
    return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    Perm r;
    r.img.resize(a.img.size());
    for (size_t i = 0; i < a.img.size(); ++i) r.img[i] = b.img[a.img[i]];
    return r;
}

bool perm_is_involution(const Perm& p) {
    for (size_t i = 0; i < p.img.size(); ++i) {
        if (p.img[p.img[i]] != i) return false;
    }
    return true;
}

bool perm_is_identity(const Perm& p) {
    for (size_t i = 0; i < p.img.size(); ++i) {
        if (p.img[i] != i) return false;
    }
    return true;
}

CycleType cycle_type(const Perm& p) {
    int m = p.size();
    std::vector<bool> seen(m, false);
    CycleType parts;
    for (int i = 0; i < m; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = p.img[j];
            ++len;
        }
        parts.push_back(len);
    }
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

std::vector<Perm> reflection_perms(const RootSystem& rs, const WeightOrbit& orbit) {
    int m = (int)orbit.weights.size();
    std::vector<Perm> gens;
    gens.reserve(rs.rank);
    for (int i = 1; i <= rs.rank; ++i) {
        Perm p;
        p.img.resize(m);
        for (int k = 0; k < m; ++k) {
            Weight r = reflect(rs, i, orbit.weights[k]);
            auto it = orbit.index.find(std::vector<int>(r.data(), r.data() + r.size()));
            if (it == orbit.index.end())
                throw Error("reflection_perms: reflection left the orbit (corrupted orbit)");
            p.img[k] = (uint16_t)it->second;
        }
        gens.push_back(std::move(p));
    }
    return gens;
}

Perm word_perm(const std::vector<Perm>& gens, const std::vector<int>& word) {
    if (gens.empty()) throw Error("word_perm: no generators");
    Perm acc = perm_identity(gens[0].size());
    for (int w : word) {
        if (w < 1 || w > (int)gens.size()) throw Error("word_perm: generator index out of range");
        acc = perm_compose(acc, gens[w - 1]);
    }
    return acc;
}

EnumLimits::EnumLimits() {
    max_bytes = 1ull << 30;
    if (const char* env = std::getenv("DIFFGAL_ENUM_MEM_MB")) {
        uint64_t mb = std::strtoull(env, nullptr, 10);
        if (mb > 0) max_bytes = mb << 20;
    }
}

namespace {

// BFS over the generated group with elements packed into a flat arena and an
// open-addressing index on top of it.
template <class E>
EnumerationResult enumerate_packed(const std::vector<Perm>& gens, const EnumLimits& limits) {
    const int m = gens[0].size();
    const size_t width = (size_t)m;
    const uint64_t per_elem = width * sizeof(E) + sizeof(uint32_t) + 1 + sizeof(uint32_t);
    const uint64_t cap_elems = std::max<uint64_t>(16, limits.max_bytes / per_elem);

    std::vector<E> arena;
    std::vector<uint32_t> parent;
    std::vector<int8_t> via;

    size_t table_cap = 1024;
    std::vector<uint32_t> table(table_cap, UINT32_MAX);

    auto hash_bytes = [&](const E* p) {
        uint64_t h = 1469598103934665603ull;
        const unsigned char* b = reinterpret_cast<const unsigned char*>(p);
        for (size_t i = 0; i < width * sizeof(E); ++i) {
            h ^= b[i];
            h *= 1099511628211ull;
        }
        return h;
    };
    auto elem_ptr = [&](uint32_t idx) { return arena.data() + (size_t)idx * width; };

    auto rehash = [&]() {
        table_cap <<= 1;
        std::fill(table.begin(), table.end(), UINT32_MAX);
        table.assign(table_cap, UINT32_MAX);
        uint32_t n = (uint32_t)(arena.size() / width);
        for (uint32_t i = 0; i < n; ++i) {
            uint64_t h = hash_bytes(elem_ptr(i));
            size_t slot = h & (table_cap - 1);
            while (table[slot] != UINT32_MAX) slot = (slot + 1) & (table_cap - 1);
            table[slot] = i;
        }
    };

    // returns the index, inserting if new
    auto lookup_or_insert = [&](const E* cand, uint32_t par, int8_t g, bool& inserted) {
        uint64_t h = hash_bytes(cand);
        size_t slot = h & (table_cap - 1);
        while (table[slot] != UINT32_MAX) {
            if (std::memcmp(elem_ptr(table[slot]), cand, width * sizeof(E)) == 0) {
                inserted = false;
                return table[slot];
            }
            slot = (slot + 1) & (table_cap - 1);
        }
        uint32_t idx = (uint32_t)(arena.size() / width);
        if (idx + 1 > cap_elems)
            throw EnumCapError("group enumeration exceeded its memory budget (" +
                               std::to_string(limits.max_bytes >> 20) + " MiB)");
        arena.insert(arena.end(), cand, cand + width);
        parent.push_back(par);
        via.push_back(g);
        table[slot] = idx;
        inserted = true;
        if ((arena.size() / width) * 10 >= table_cap * 7) rehash();
        return idx;
    };

    std::vector<E> tmp(width);
    for (int i = 0; i < m; ++i) tmp[i] = (E)i;
    bool ins = false;
    lookup_or_insert(tmp.data(), UINT32_MAX, -1, ins);

    EnumerationResult result;
    std::map<CycleType, uint32_t> first_seen;

    auto record = [&](uint32_t idx) {
        Perm p;
        p.img.resize(m);
        const E* e = elem_ptr(idx);
        for (int i = 0; i < m; ++i) p.img[i] = (uint16_t)e[i];
        CycleType ct = cycle_type(p);
        if (!first_seen.count(ct)) first_seen.emplace(ct, idx);
    };
    record(0);

    for (uint32_t cur = 0; (size_t)cur * width < arena.size(); ++cur) {
        for (size_t g = 0; g < gens.size(); ++g) {
            const E* e = elem_ptr(cur);
            for (int i = 0; i < m; ++i) tmp[i] = (E)gens[g].img[e[i]];
            uint32_t idx = lookup_or_insert(tmp.data(), cur, (int8_t)g, ins);
            if (ins) record(idx);
        }
    }

    result.group_order = arena.size() / width;
    std::vector<std::pair<uint32_t, CycleType>> order;
    for (auto& [ct, idx] : first_seen) order.emplace_back(idx, ct);
    std::sort(order.begin(), order.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [idx, ct] : order) {
        std::vector<int> word;
        for (uint32_t j = idx; parent[j] != UINT32_MAX; j = parent[j]) word.push_back(via[j] + 1);
        std::reverse(word.begin(), word.end());
        result.types.push_back({ct, std::move(word)});
    }
    return result;
}

}  // namespace

EnumerationResult enumerate_cycle_types(const std::vector<Perm>& gens, const EnumLimits& limits) {
    if (gens.empty()) throw Error("enumerate_cycle_types: no generators");
    int m = gens[0].size();
    if (m <= 255) return enumerate_packed<uint8_t>(gens, limits);
    return enumerate_packed<uint16_t>(gens, limits);
}

std::vector<int> invariant_sums(const CycleType& ct) {
    int total = 0;
    for (int p : ct) total += p;
    std::vector<uint64_t> dp((total + 64) / 64, 0);
    dp[0] = 1;
    for (int part : ct) {
        // dp |= dp << part
        for (int w = (int)dp.size() - 1; w >= 0; --w) {
            uint64_t v = dp[w];
            if (!v) continue;
            int tw = w + part / 64, sh = part % 64;
            if (tw < (int)dp.size()) dp[tw] |= v << sh;
            if (sh && tw + 1 < (int)dp.size()) dp[tw + 1] |= v >> (64 - sh);
        }
    }
    std::vector<int> sums;
    for (int s = 0; s <= total; ++s) {
        if (dp[s / 64] >> (s % 64) & 1) sums.push_back(s);
    }
    return sums;
}

std::pair<bool, TransitivityCertificate> is_strictly_transitive(const std::vector<CycleType>& cts,
                                                                int m) {
    for (const auto& ct : cts) {
        int s = 0;
        for (int p : ct) s += p;
        if (s != m) throw Error("is_strictly_transitive: cycle type does not sum to m");
    }
    std::vector<std::vector<bool>> achievable;
    achievable.reserve(cts.size());
    for (const auto& ct : cts) {
        std::vector<bool> a(m + 1, false);
        for (int s : invariant_sums(ct)) a[s] = true;
        achievable.push_back(std::move(a));
    }
    TransitivityCertificate cert;
    cert.witness_type.assign(std::max(0, m - 1), -1);
    for (int i = 1; i <= m - 1; ++i) {
        int found = -1;
        for (size_t t = 0; t < cts.size(); ++t) {
            if (!achievable[t][i]) { found = (int)t; break; }
        }
        if (found < 0) {
            cert.ok = false;
            cert.blocking_i = i;
            return {false, cert};
        }
        cert.witness_type[i - 1] = found;
    }
    cert.ok = true;
    return {true, cert};
}

bool replay_certificate(const TransitivityCertificate& cert, const std::vector<CycleType>& cts,
                        int m) {
    if (!cert.ok) {
        int i = cert.blocking_i;
        if (i < 1 || i > m - 1) return false;
        for (const auto& ct : cts) {
            auto sums = invariant_sums(ct);
            if (!std::binary_search(sums.begin(), sums.end(), i)) return false;  // i was avoidable
        }
        return true;
    }
    if ((int)cert.witness_type.size() != m - 1) return false;
    for (int i = 1; i <= m - 1; ++i) {
        int t = cert.witness_type[i - 1];
        if (t < 0 || t >= (int)cts.size()) return false;
        auto sums = invariant_sums(cts[t]);
        if (std::binary_search(sums.begin(), sums.end(), i)) return false;
    }
    return true;
}

StrictSearchResult find_strictly_transitive(Kind kind, int rank, const Weight& highest,
                                            int max_set_size, const EnumLimits& limits) {
    RootSystem rs = RootSystem::make(kind, rank);
    WeightOrbit orbit = weight_orbit(rs, highest);
    std::vector<Perm> gens = reflection_perms(rs, orbit);
    StrictSearchResult res;
    res.orbit_size = (int)orbit.weights.size();
    res.enumeration = enumerate_cycle_types(gens, limits);

    const int m = res.orbit_size;
    std::vector<CycleType> cts;
    cts.reserve(res.enumeration.types.size());
    for (auto& e : res.enumeration.types) cts.push_back(e.parts);

    auto [exists, cert] = is_strictly_transitive(cts, m);
    res.exists = exists;
    res.full_set_certificate = cert;
    // Monotone criterion: a subset can only cover fewer cardinalities than the
    // full set, so a failing full set is an unconditional non-existence proof.
    if (!exists) {
        res.searched_up_to = (int)cts.size();
        return res;
    }

    int ntypes = (int)cts.size();
    int bound = (max_set_size <= 0 || max_set_size > ntypes) ? ntypes : max_set_size;
    res.searched_up_to = bound;

    // coverage[t] bit i set when cardinality i cannot stay invariant under
    // type t; a subset works when coverages union to all of 1..m-1
    int words = (m + 63) / 64;
    std::vector<std::vector<uint64_t>> coverage(ntypes, std::vector<uint64_t>(words, 0));
    std::vector<uint64_t> full(words, 0);
    for (int i = 1; i <= m - 1; ++i) full[i / 64] |= 1ull << (i % 64);
    for (int t = 0; t < ntypes; ++t) {
        std::vector<bool> a(m + 1, false);
        for (int s : invariant_sums(cts[t])) a[s] = true;
        for (int i = 1; i <= m - 1; ++i) {
            if (!a[i]) coverage[t][i / 64] |= 1ull << (i % 64);
        }
    }
    auto covers_all = [&](const std::vector<uint64_t>& u) {
        for (int w = 0; w < words; ++w) {
            if ((u[w] & full[w]) != full[w]) return false;
        }
        return true;
    };

    std::vector<int> subset;
    std::vector<std::vector<uint64_t>> stack;  // running unions
    auto has_minimal_subset = [&](const std::vector<int>& s) {
        for (const auto& ms : res.minimal_sets) {
            if (std::includes(s.begin(), s.end(), ms.begin(), ms.end())) return true;
        }
        return false;
    };
    // enumerate subsets in increasing size, lexicographic within a size
    std::function<void(int, int)> rec = [&](int start, int remaining) {
        if (remaining == 0) {
            if (!has_minimal_subset(subset) && covers_all(stack.back())) {
                res.minimal_sets.push_back(subset);
            }
            return;
        }
        for (int t = start; t + remaining <= ntypes; ++t) {
            subset.push_back(t);
            std::vector<uint64_t> u = stack.back();
            for (int w = 0; w < words; ++w) u[w] |= coverage[t][w];
            stack.push_back(std::move(u));
            rec(t + 1, remaining - 1);
            stack.pop_back();
            subset.pop_back();
        }
    };
    for (int size = 1; size <= bound; ++size) {
        stack.assign(1, std::vector<uint64_t>(words, 0));
        rec(0, size);
    }
    return res;
}

}  // namespace diffgal
