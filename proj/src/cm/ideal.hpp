#pragma once

#include <vector>

namespace newforms {

// Integral ideal of the maximal order Z[w] of the imaginary quadratic field
// with fundamental discriminant `disc`, where w = (D + sqrt(D))/2 satisfies
// w^2 = D*w - (D^2-D)/4. Stored in Hermite form e*(a*Z + (m + w)*Z) with
// e >= 1, a >= 1, 0 <= m < a and a | Nm(m + w). The norm is e^2 * a.
struct IdealHNF {
    long disc = 0;
    long e = 1, a = 1, m = 0;

    bool operator==(const IdealHNF &o) const = default;
};

// Nm(w) = (D^2 - D)/4, the constant term of w's minimal polynomial.
long omega_norm(long disc);

// Validates the Hermite form invariants and normalizes m into [0, a).
IdealHNF make_ideal(long disc, long e, long a, long m);

IdealHNF unit_ideal(long disc);

long ideal_norm(const IdealHNF &ideal);

// Membership of u + v*w.
bool ideal_contains(const IdealHNF &ideal, long u, long v);

IdealHNF ideal_mul(const IdealHNF &x, const IdealHNF &y);

// Image under the nontrivial field automorphism w -> D - w.
IdealHNF ideal_conjugate(const IdealHNF &ideal);

// -1, 0 or +1 according to whether p is inert, ramified or split.
int splitting_type(long disc, long p);

// The primes above p: two for split p, one (of norm p) for ramified p, one
// (the ideal pO, of norm p^2) for inert p.
std::vector<IdealHNF> primes_above(long disc, long p);

// All integral ideals of the given norm, without duplicates.
std::vector<IdealHNF> ideals_of_norm(long disc, long norm);

// Exact quotient ideal / prime, for a prime ideal dividing it.
IdealHNF ideal_divide_prime(const IdealHNF &ideal, const IdealHNF &prime);

// Prime ideals dividing the given ideal, each listed once.
std::vector<IdealHNF> prime_divisors(const IdealHNF &ideal);

}  // namespace newforms
