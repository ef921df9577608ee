#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace newforms {

// Exact arithmetic scalars. mpq_class keeps fractions canonical (reduced,
// positive denominator, 0 = 0/1) after every operation.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer &num, const Integer &den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational &q) { return q.get_den() == 1; }

inline Integer floor_div(const Integer &a, const Integer &b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Integer int_gcd(const Integer &a, const Integer &b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer int_lcm(const Integer &a, const Integer &b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// g = gcd(a,b) together with s,t such that s*a + t*b = g.
inline Integer ext_gcd(const Integer &a, const Integer &b, Integer &s, Integer &t) {
    Integer g;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer int_pow(const Integer &base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline long gcd_long(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// s*a + t*b = gcd; returns gcd >= 0.
inline long ext_gcd_long(long a, long b, long &s, long &t) {
    long s0 = 1, t0 = 0, s1 = 0, t1 = 1;
    while (b) {
        long q = a / b;
        long r = a - q * b;
        a = b;
        b = r;
        long s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = s1;
        t0 = t1;
        s1 = s2;
        t1 = t2;
    }
    if (a < 0) {
        a = -a;
        s0 = -s0;
        t0 = -t0;
    }
    s = s0;
    t = t0;
    return a;
}

} // namespace newforms
