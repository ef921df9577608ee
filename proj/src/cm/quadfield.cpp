#include "cm/quadfield.hpp"

#include "algebra/arith.hpp"

#include <stdexcept>

namespace newforms {

namespace {

bool is_squarefree(long n) {
    if (n < 0) n = -n;
    if (n == 0) return false;
    for (auto &[p, e] : factorize(n))
        if (e > 1) return false;
    return true;
}

}  // namespace

bool is_fundamental_discriminant(long d) {
    if (d == 1 || d == 0) return false;
    long r = ((d % 4) + 4) % 4;
    if (r == 1) return is_squarefree(d);
    if (r != 0) return false;
    long m = d / 4;
    long mr = ((m % 4) + 4) % 4;
    return (mr == 2 || mr == 3) && is_squarefree(m);
}

std::vector<long> cm_discriminants_for_level(long n) {
    if (n <= 0) throw std::invalid_argument("level must be positive");
    std::vector<long> out;
    for (long a = 3; a * a <= n; ++a)
        if (n % (a * a) == 0 && is_fundamental_discriminant(-a)) out.push_back(-a);
    return out;
}

long unit_count(long d) {
    if (d >= 0 || !is_fundamental_discriminant(d))
        throw std::invalid_argument("unit_count needs a negative fundamental discriminant");
    if (d == -3) return 6;
    if (d == -4) return 4;
    return 2;
}

}  // namespace newforms
