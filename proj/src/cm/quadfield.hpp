#pragma once

#include <vector>

namespace newforms {

// True for discriminants of quadratic fields: squarefree D = 1 mod 4, or
// D = 4m with m squarefree and m = 2, 3 mod 4. D = 1 is excluded.
bool is_fundamental_discriminant(long d);

// Negative fundamental discriminants D with D^2 | N, in decreasing order
// (-3, -4, -7, ...). These are the only CM fields whose weight-k forms can
// appear at level N with trivial character.
std::vector<long> cm_discriminants_for_level(long n);

// Number of units of the imaginary quadratic order of discriminant D:
// 6 for D = -3, 4 for D = -4, 2 otherwise.
long unit_count(long d);

}  // namespace newforms
