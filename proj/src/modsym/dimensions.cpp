#include "modsym/dimensions.hpp"

#include "algebra/arith.hpp"
#include "algebra/kronecker.hpp"

#include <stdexcept>

namespace newforms {

namespace {

void check_level(long N) {
    if (N < 1) throw std::invalid_argument("level must be positive");
}

// Multiplicative inversion weights for the divisor-count identity
// dim S_k(N) = sum_{M | N} d(N/M) dim_new S_k(M): beta(p) = -2, beta(p^2) = 1,
// beta(p^e) = 0 for e >= 3.
long beta(long n) {
    long r = 1;
    for (const auto &[p, e] : factorize(n)) {
        (void)p;
        if (e == 1) r *= -2;
        else if (e == 2) r *= 1;
        else return 0;
    }
    return r;
}

long gcd_pair(long a, long b) {
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace

long gamma0_index(long N) {
    check_level(N);
    long idx = N;
    for (const auto &[p, e] : factorize(N)) {
        (void)e;
        idx += idx / p;
    }
    return idx;
}

long elliptic_points_order2(long N) {
    check_level(N);
    if (N % 4 == 0) return 0;
    long r = 1;
    for (const auto &[p, e] : factorize(N)) {
        (void)e;
        if (p == 2) continue;
        r *= 1 + kronecker_symbol(-1L, p);
    }
    return r;
}

long elliptic_points_order3(long N) {
    check_level(N);
    if (N % 9 == 0) return 0;
    long r = 1;
    for (const auto &[p, e] : factorize(N)) {
        (void)e;
        r *= 1 + kronecker_symbol(-3L, p);
    }
    return r;
}

long cusp_count(long N) {
    check_level(N);
    long r = 0;
    for (long d : divisors(N)) r += euler_phi(gcd_pair(d, N / d));
    return r;
}

long gamma0_genus(long N) {
    check_level(N);
    long mu = gamma0_index(N);
    long e2 = elliptic_points_order2(N);
    long e3 = elliptic_points_order3(N);
    long ei = cusp_count(N);
    // 12g = 12 + mu - 3 e2 - 4 e3 - 6 einf
    long twelve_g = 12 + mu - 3 * e2 - 4 * e3 - 6 * ei;
    if (twelve_g % 12 != 0) throw std::logic_error("genus formula gave a non-integer");
    return twelve_g / 12;
}

long dim_cusp_forms(long N, long k) {
    check_level(N);
    if (k < 2 || k % 2 != 0) return 0;
    long g = gamma0_genus(N);
    if (k == 2) return g;
    long e2 = elliptic_points_order2(N);
    long e3 = elliptic_points_order3(N);
    long ei = cusp_count(N);
    return (k - 1) * (g - 1) + (k / 2 - 1) * ei + (k / 4) * e2 + (k / 3) * e3;
}

long dim_new_cusp_forms(long N, long k) {
    check_level(N);
    long dim = 0;
    for (long M : divisors(N)) dim += beta(N / M) * dim_cusp_forms(M, k);
    return dim;
}

long sturm_bound(long N, long k) {
    check_level(N);
    if (k < 1) throw std::invalid_argument("weight must be positive");
    long mu = gamma0_index(N);
    return (k * mu + 11) / 12;
}

} // namespace newforms
