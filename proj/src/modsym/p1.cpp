#include "modsym/p1.hpp"

#include "algebra/rational.hpp"

#include <stdexcept>

namespace newforms {

namespace {

long mod_pos(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

} // namespace

P1List::P1List(long N) : N_(N) {
    if (N < 1) throw std::invalid_argument("level must be positive");
    if (N == 1) {
        reps_ = {{0, 0}};
        index_[0] = 0;
        return;
    }
    for (long u = 0; u < N; ++u) {
        for (long v = 0; v < N; ++v) {
            if (gcd_long(gcd_long(u, v), N) != 1) continue;
            auto [cu, cv] = normalize(u, v);
            long key = cu * N + cv;
            if (index_.find(key) == index_.end()) {
                index_[key] = static_cast<long>(reps_.size());
                reps_.emplace_back(cu, cv);
            }
        }
    }
}

std::pair<long, long> P1List::normalize(long u, long v) const {
    const long N = N_;
    if (N == 1) return {0, 0};
    u = mod_pos(u, N);
    v = mod_pos(v, N);
    if (gcd_long(gcd_long(u, v), N) != 1)
        throw std::invalid_argument("pair is not a point of the projective line");
    if (u == 0) return {0, 1};
    long s, t;
    long g = ext_gcd_long(u, N, s, t);
    s = mod_pos(s, N);
    // s*u === g (mod N); push s along N/g until it is a unit mod N.
    long Ng = N / g;
    while (gcd_long(s, N) != 1) s = mod_pos(s + Ng, N);
    long v2 = mod_pos(s * v, N);
    // The stabilizer of the first coordinate is {units c === 1 mod N/g};
    // take the smallest second coordinate it can reach.
    long best = v2;
    long c = 1;
    for (long i = 1; i < g; ++i) {
        c = mod_pos(c + Ng, N);
        if (gcd_long(c, N) != 1) continue;
        long cand = mod_pos(c * v2, N);
        if (cand < best) best = cand;
    }
    return {g, best};
}

long P1List::index_of(long u, long v) const {
    const long N = N_;
    if (N == 1) return 0;
    u = mod_pos(u, N);
    v = mod_pos(v, N);
    if (gcd_long(gcd_long(u, v), N) != 1) return -1;
    auto [cu, cv] = normalize(u, v);
    auto it = index_.find(cu * N + cv);
    if (it == index_.end()) throw std::logic_error("normalized pair missing from the list");
    return it->second;
}

SL2Lift lift_to_sl2(long u, long v, long N) {
    if (N < 1) throw std::invalid_argument("level must be positive");
    u = ((u % N) + N) % N;
    v = ((v % N) + N) % N;
    if (N == 1) return {1, 0, 0, 1};
    if (gcd_long(gcd_long(u, v), N) != 1)
        throw std::invalid_argument("pair is not liftable");
    // Shift the pair by multiples of N until its entries are coprime over Z,
    // then solve the determinant condition with the extended gcd. Primes
    // dividing both u and N never divide v, so only primes away from N need
    // the shift, and some shift below their product works.
    if (u == 0) u = N;
    long vv = v;
    while (gcd_long(u, vv) != 1) vv += N;
    long s, t;
    ext_gcd_long(u, vv, s, t); // s*u + t*vv = 1
    // [t, -s; u, vv] has determinant t*vv + s*u = 1
    return {t, -s, u, vv};
}

} // namespace newforms
