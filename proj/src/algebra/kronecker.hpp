#pragma once

#include "algebra/rational.hpp"

namespace newforms {

// Kronecker symbol (a|n), the extension of the Jacobi symbol to all integers.
int kronecker_symbol(const Integer &a, const Integer &n);
int kronecker_symbol(long a, long n);

} // namespace newforms
