#pragma once

#include <vector>

namespace newforms {

struct HeilbronnMatrix {
    long a, b, c, d;
};

// Cremona's list for a prime p: drives the Hecke operator at primes not
// dividing the level. Size is O(p log p).
std::vector<HeilbronnMatrix> heilbronn_cremona(long p);

// Merel's list for arbitrary n >= 1: all [a b; c d] with determinant n,
// a > b >= 0, d > c >= 0. Valid at every level, in particular at primes
// dividing it.
std::vector<HeilbronnMatrix> heilbronn_merel(long n);

} // namespace newforms
