#include "diffgal/root_system.hpp"

#include <deque>

namespace diffgal {

Kind kind_from_string(const std::string& s) {
    if (s == "A" || s == "a") return Kind::A;
    if (s == "B" || s == "b") return Kind::B;
    if (s == "C" || s == "c") return Kind::C;
    if (s == "D" || s == "d") return Kind::D;
    if (s == "E6" || s == "e6") return Kind::E6;
    if (s == "E7" || s == "e7") return Kind::E7;
    throw UnsupportedKindError("unknown root system kind: " + s);
}

std::string kind_to_string(Kind k) {
    switch (k) {
        case Kind::A: return "A";
        case Kind::B: return "B";
        case Kind::C: return "C";
        case Kind::D: return "D";
        case Kind::E6: return "E6";
        case Kind::E7: return "E7";
    }
    return "?";
}

namespace {

Eigen::MatrixXi chain_cartan(int l) {
    Eigen::MatrixXi c = Eigen::MatrixXi::Zero(l, l);
    for (int i = 0; i < l; ++i) {
        c(i, i) = 2;
        if (i + 1 < l) {
            c(i, i + 1) = -1;
            c(i + 1, i) = -1;
        }
    }
    return c;
}

// E-series: chain 1-3-4-5-6(-7) with node 2 attached to node 4.
Eigen::MatrixXi e_cartan(int l) {
    Eigen::MatrixXi c = Eigen::MatrixXi::Zero(l, l);
    for (int i = 0; i < l; ++i) c(i, i) = 2;
    auto link = [&](int a, int b) {
        c(a - 1, b - 1) = -1;
        c(b - 1, a - 1) = -1;
    };
    link(1, 3);
    link(3, 4);
    link(4, 5);
    link(5, 6);
    link(2, 4);
    if (l == 7) link(6, 7);
    return c;
}

}  // namespace

RootSystem RootSystem::make(Kind kind, int rank) {
    auto bad = [&](int lo) {
        if (rank < lo)
            throw UnsupportedKindError("rank " + std::to_string(rank) + " too small for type " +
                                       kind_to_string(kind));
    };
    RootSystem rs{kind, rank, {}};
    switch (kind) {
        case Kind::A:
            bad(1);
            rs.cartan = chain_cartan(rank);
            break;
        case Kind::B: {
            bad(2);
            rs.cartan = chain_cartan(rank);
            // alpha_l short: <alpha_{l-1}, alpha_l^vee> = -2
            rs.cartan(rank - 1, rank - 2) = -2;
            break;
        }
        case Kind::C: {
            bad(2);
            rs.cartan = chain_cartan(rank);
            // alpha_l long: <alpha_l, alpha_{l-1}^vee> = -2
            rs.cartan(rank - 2, rank - 1) = -2;
            break;
        }
        case Kind::D: {
            bad(3);
            rs.cartan = chain_cartan(rank);
            rs.cartan(rank - 1, rank - 2) = 0;
            rs.cartan(rank - 2, rank - 1) = 0;
            rs.cartan(rank - 3, rank - 1) = -1;
            rs.cartan(rank - 1, rank - 3) = -1;
            break;
        }
        case Kind::E6:
            if (rank != 6) throw UnsupportedKindError("E6 has rank 6");
            rs.cartan = e_cartan(6);
            break;
        case Kind::E7:
            if (rank != 7) throw UnsupportedKindError("E7 has rank 7");
            rs.cartan = e_cartan(7);
            break;
    }
    return rs;
}

std::vector<Weight> minuscule_weights(const RootSystem& rs) {
    auto fundamental = [&](int i) {
        Weight w = Weight::Zero(rs.rank);
        w(i - 1) = 1;
        return w;
    };
    std::vector<Weight> out;
    switch (rs.kind) {
        case Kind::A:
            for (int i = 1; i <= rs.rank; ++i) out.push_back(fundamental(i));
            break;
        case Kind::B:
            out.push_back(fundamental(rs.rank));
            break;
        case Kind::C:
            out.push_back(fundamental(1));
            break;
        case Kind::D:
            out.push_back(fundamental(1));
            out.push_back(fundamental(rs.rank - 1));
            out.push_back(fundamental(rs.rank));
            break;
        case Kind::E6:
            out.push_back(fundamental(1));
            out.push_back(fundamental(6));
            break;
        case Kind::E7:
            out.push_back(fundamental(7));
            break;
    }
    return out;
}

Weight reflect(const RootSystem& rs, int i, const Weight& w) {
    return w - w(i - 1) * rs.cartan.col(i - 1);
}

WeightOrbit weight_orbit(const RootSystem& rs, const Weight& highest, size_t guard) {
    bool minuscule = false;
    for (const Weight& m : minuscule_weights(rs)) {
        if (m == highest) { minuscule = true; break; }
    }
    if (!minuscule)
        throw OrbitGuardError("weight_orbit: highest weight is not minuscule for " +
                              kind_to_string(rs.kind) + std::to_string(rs.rank));
    WeightOrbit orbit;
    auto key = [](const Weight& w) { return std::vector<int>(w.data(), w.data() + w.size()); };
    orbit.weights.push_back(highest);
    orbit.index.emplace(key(highest), 0);
    for (size_t cur = 0; cur < orbit.weights.size(); ++cur) {
        Weight w = orbit.weights[cur];
        for (int i = 1; i <= rs.rank; ++i) {
            Weight r = reflect(rs, i, w);
            auto k = key(r);
            if (orbit.index.count(k)) continue;
            if (orbit.weights.size() >= guard)
                throw OrbitGuardError("weight_orbit: orbit size guard exceeded");
            orbit.index.emplace(std::move(k), (int)orbit.weights.size());
            orbit.weights.push_back(std::move(r));
        }
    }
    return orbit;
}

}  // namespace diffgal
