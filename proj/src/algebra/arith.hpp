#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace newforms {

// Trial-division utilities for the small integers that parametrize levels,
// weights and discriminants. Heavy arithmetic stays in GMP elsewhere.

inline std::vector<std::pair<long, int>> factorize(long n) {
    if (n <= 0) throw std::invalid_argument("factorize needs a positive integer");
    std::vector<std::pair<long, int>> out;
    for (long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
        if (n % p == 0) return false;
    return true;
}

inline std::vector<long> divisors(long n) {
    std::vector<long> out = {1};
    for (const auto &[p, e] : factorize(n)) {
        size_t base = out.size();
        long pe = 1;
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (size_t j = 0; j < base; ++j) out.push_back(out[j] * pe);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<long> primes_up_to(long bound) {
    std::vector<long> out;
    for (long p = 2; p <= bound; ++p)
        if (is_prime(p)) out.push_back(p);
    return out;
}

inline long euler_phi(long n) {
    long r = n;
    for (const auto &[p, e] : factorize(n)) r -= r / p;
    return r;
}

inline int valuation(long n, long p) {
    if (n == 0) throw std::invalid_argument("valuation of zero");
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

inline long int_sqrt(long n) {
    long r = 0;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

} // namespace newforms
