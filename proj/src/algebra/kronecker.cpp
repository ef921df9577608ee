#include "algebra/kronecker.hpp"

namespace newforms {

int kronecker_symbol(const Integer &a, const Integer &n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

int kronecker_symbol(long a, long n) {
    return kronecker_symbol(Integer(a), Integer(n));
}

} // namespace newforms
