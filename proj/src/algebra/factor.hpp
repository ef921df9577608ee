#pragma once

#include "algebra/poly.hpp"
#include "algebra/rational.hpp"

#include <vector>

namespace newforms {

// Complete factorization over Q: input = unit * prod factors[i]^mult[i],
// every factor primitive over Z, irreducible over Q, positive leading
// coefficient. Factors are sorted (degree, then coefficients) so equal
// inputs always produce identical output.
struct FactoredPoly {
    Rational unit = 0;
    std::vector<std::pair<IntPoly, int>> factors;

    bool is_irreducible() const { return factors.size() == 1 && factors[0].second == 1; }
};

// Zassenhaus factorization: squarefree split, Berlekamp modulo a small good
// prime, Hensel lift to a Landau-Mignotte height, subset recombination.
// The reassembled product is checked against the input before returning.
// Throws std::invalid_argument on the zero polynomial.
FactoredPoly factor_poly(const IntPoly &p);
FactoredPoly factor_poly(const std::vector<Rational> &coeffs);

} // namespace newforms
