#pragma once

#include <Eigen/Core>
#include <map>
#include <string>
#include <vector>

#include "diffgal/rational.hpp"

namespace diffgal {

enum class Kind { A, B, C, D, E6, E7 };

Kind kind_from_string(const std::string& s);
std::string kind_to_string(Kind k);

// Weights are integer vectors in fundamental-weight coordinates,
// coords[i] = <lambda, alpha_i^vee>.
using Weight = Eigen::VectorXi;

// Cartan data in Bourbaki numbering.  Column i of cartan holds the
// fundamental-weight coordinates of the simple root alpha_i, i.e.
// cartan(j, i) = <alpha_i, alpha_j^vee>.
struct RootSystem {
    Kind kind;
    int rank;
    Eigen::MatrixXi cartan;

    static RootSystem make(Kind kind, int rank);
};

// The minuscule highest weights of the given system, as standard basis
// vectors: A: all fundamentals; B: omega_l (spin); C: omega_1;
// D: omega_1, omega_{l-1}, omega_l; E6: omega_1, omega_6; E7: omega_7.
std::vector<Weight> minuscule_weights(const RootSystem& rs);

// Simple reflection s_i (1-based index), lambda - lambda_i * alpha_i.
Weight reflect(const RootSystem& rs, int i, const Weight& w);

struct WeightOrbit {
    std::vector<Weight> weights;          // BFS order from the highest weight
    std::map<std::vector<int>, int> index;  // weight coords -> position
};

// Breadth-first closure of the highest weight under all simple reflections;
// children are visited in simple-root order, so the labeling is canonical.
WeightOrbit weight_orbit(const RootSystem& rs, const Weight& highest, size_t guard = 1u << 20);

}  // namespace diffgal
