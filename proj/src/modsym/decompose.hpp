#pragma once

#include "algebra/poly.hpp"
#include "modsym/space.hpp"

#include <string>
#include <vector>

namespace newforms {

// A Galois orbit of newforms: one Hecke-irreducible piece of the new
// subspace. `dim` is the number of conjugate newforms (the degree of the
// Hecke eigenvalue field).
struct NewformOrbit {
    long level = 0;
    long weight = 0;
    long dim = 0;
    bool cm = false;
    long cm_discriminant = 0;               // negative fundamental, 0 if not CM
    std::vector<std::pair<long, int>> al_signs;  // (Q, +-1), one per prime power Q || N
    std::vector<std::pair<long, IntPoly>> eigenvalue_minpolys;  // a_p minimal polys, small p

    // Basis inside the new subspace, kept for further operator evaluation.
    Subspace span;
};

struct OrbitCounts {
    long total = 0;
    long cm = 0;
    long ncm = 0;
};

// Thrown when the splitting procedure cannot certify a piece as a single
// orbit with the operators it is willing to try.
struct DecompositionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Decompose the new subspace at (level, weight) into Galois orbits, sorted
// by dimension and then by the printed eigenvalue data. Weight must be even
// and >= 2.
std::vector<NewformOrbit> newform_orbits(long level, long weight);

OrbitCounts orbit_counts(long level, long weight);

// True when dim S_k(1) <= 1 or the characteristic polynomial of T_2 on
// S_k(1) is irreducible over Q.
bool maeda_t2_irreducible(long weight);

}  // namespace newforms
