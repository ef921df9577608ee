#include "algebra/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace newforms {

namespace {

// --- arithmetic for polynomials over F_p (p small, coefficients in [0,p)) --

using ModPoly = std::vector<uint64_t>; // lowest-first, no trailing zeros

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

uint64_t powmod(uint64_t b, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = mulmod(r, b, p);
        b = mulmod(b, b, p);
        e >>= 1;
    }
    return r;
}

uint64_t invmod(uint64_t a, uint64_t p) { return powmod(a % p, p - 2, p); }

void mp_trim(ModPoly &a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long mp_deg(const ModPoly &a) { return static_cast<long>(a.size()) - 1; }

ModPoly mp_mul(const ModPoly &a, const ModPoly &b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    }
    mp_trim(r);
    return r;
}

ModPoly mp_sub(const ModPoly &a, const ModPoly &b, uint64_t p) {
    ModPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
    mp_trim(r);
    return r;
}

// Remainder of a by b; b need not be monic.
ModPoly mp_rem(ModPoly a, const ModPoly &b, uint64_t p) {
    uint64_t linv = invmod(b.back(), p);
    while (mp_deg(a) >= mp_deg(b)) {
        uint64_t c = mulmod(a.back(), linv, p);
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = (a[shift + i] + p - mulmod(c, b[i], p)) % p;
        mp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

ModPoly mp_quot(ModPoly a, const ModPoly &b, uint64_t p) {
    if (mp_deg(a) < mp_deg(b)) return {};
    uint64_t linv = invmod(b.back(), p);
    ModPoly q(a.size() - b.size() + 1, 0);
    while (mp_deg(a) >= mp_deg(b)) {
        uint64_t c = mulmod(a.back(), linv, p);
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = (a[shift + i] + p - mulmod(c, b[i], p)) % p;
        mp_trim(a);
        if (a.empty()) break;
    }
    mp_trim(q);
    return q;
}

ModPoly mp_monic(ModPoly a, uint64_t p) {
    if (a.empty()) return a;
    uint64_t inv = invmod(a.back(), p);
    for (auto &x : a) x = mulmod(x, inv, p);
    return a;
}

ModPoly mp_gcd(ModPoly a, ModPoly b, uint64_t p) {
    while (!b.empty()) {
        ModPoly r = mp_rem(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return mp_monic(std::move(a), p);
}

ModPoly mp_derivative(const ModPoly &a, uint64_t p) {
    if (a.size() < 2) return {};
    ModPoly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = mulmod(a[i], i % p, p);
    mp_trim(r);
    return r;
}

// x^e mod f.
ModPoly mp_xpow_mod(uint64_t e, const ModPoly &f, uint64_t p) {
    ModPoly r = {1};
    ModPoly base = mp_rem({0, 1}, f, p);
    while (e) {
        if (e & 1) r = mp_rem(mp_mul(r, base, p), f, p);
        base = mp_rem(mp_mul(base, base, p), f, p);
        e >>= 1;
    }
    return r;
}

ModPoly reduce_mod(const IntPoly &g, uint64_t p) {
    ModPoly r(static_cast<size_t>(g.degree()) + 1);
    for (long i = 0; i <= g.degree(); ++i)
        r[static_cast<size_t>(i)] = mpz_fdiv_ui(g.coeff(i).get_mpz_t(), p);
    mp_trim(r);
    return r;
}

// Extended gcd over F_p[x]: returns g = gcd, sets s with s*a === g mod b
// (the t cofactor is not needed by the lifting code).
ModPoly mp_ext_gcd(ModPoly a, ModPoly b, uint64_t p, ModPoly &s) {
    ModPoly s0 = {1}, s1 = {};
    while (!b.empty()) {
        ModPoly q = mp_quot(a, b, p);
        ModPoly r = mp_sub(a, mp_mul(q, b, p), p);
        a = std::move(b);
        b = std::move(r);
        ModPoly s2 = mp_sub(s0, mp_mul(q, s1, p), p);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (a.empty()) throw std::logic_error("ext gcd of zero polynomials");
    uint64_t inv = invmod(a.back(), p);
    for (auto &x : a) x = mulmod(x, inv, p);
    for (auto &x : s0) x = mulmod(x, inv, p);
    s = std::move(s0);
    return a;
}

// --- Berlekamp factorization of a squarefree monic polynomial mod p --------

// Right kernel basis of an n x n matrix mod p (column vectors).
std::vector<std::vector<uint64_t>> kernel_mod_p(std::vector<std::vector<uint64_t>> m, uint64_t p) {
    const long n = static_cast<long>(m.size());
    std::vector<long> pivot_of_col(n, -1);
    long row = 0;
    for (long col = 0; col < n && row < n; ++col) {
        long piv = -1;
        for (long r = row; r < n; ++r)
            if (m[r][col] % p != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[row]);
        uint64_t inv = invmod(m[row][col], p);
        for (long j = 0; j < n; ++j) m[row][j] = mulmod(m[row][j], inv, p);
        for (long r = 0; r < n; ++r) {
            if (r == row || m[r][col] == 0) continue;
            uint64_t f = m[r][col];
            for (long j = 0; j < n; ++j)
                m[r][j] = (m[r][j] + p - mulmod(f, m[row][j], p)) % p;
        }
        pivot_of_col[col] = row;
        ++row;
    }
    std::vector<std::vector<uint64_t>> basis;
    for (long c = 0; c < n; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        std::vector<uint64_t> v(n, 0);
        v[c] = 1;
        for (long c2 = 0; c2 < n; ++c2)
            if (pivot_of_col[c2] >= 0) v[c2] = (p - m[pivot_of_col[c2]][c] % p) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

// Berlekamp subalgebra basis for monic squarefree f mod p; size = number of
// irreducible factors.
std::vector<ModPoly> berlekamp_basis(const ModPoly &f, uint64_t p) {
    const long n = mp_deg(f);
    ModPoly xp = mp_xpow_mod(p, f, p);
    // Q[i] = x^(i*p) mod f as a row; kernel of (Q - I)^T.
    std::vector<ModPoly> rows(n);
    rows[0] = {1};
    for (long i = 1; i < n; ++i) rows[i] = mp_rem(mp_mul(rows[i - 1], xp, p), f, p);
    std::vector<std::vector<uint64_t>> m(n, std::vector<uint64_t>(n, 0));
    for (long i = 0; i < n; ++i) {
        for (size_t j = 0; j < rows[i].size(); ++j) m[j][i] = rows[i][j]; // transpose
        m[i][i] = (m[i][i] + p - 1) % p;
    }
    auto kern = kernel_mod_p(std::move(m), p);
    std::vector<ModPoly> out;
    out.reserve(kern.size());
    for (auto &v : kern) {
        ModPoly g(v.begin(), v.end());
        mp_trim(g);
        out.push_back(std::move(g));
    }
    return out;
}

// Full split of monic squarefree f into monic irreducibles mod p.
std::vector<ModPoly> berlekamp_factor(const ModPoly &f, uint64_t p) {
    std::vector<ModPoly> basis = berlekamp_basis(f, p);
    const size_t r = basis.size();
    std::vector<ModPoly> factors = {f};
    if (r == 1) return factors;
    for (const auto &v : basis) {
        if (mp_deg(v) < 1) continue; // constants split nothing
        std::vector<ModPoly> next;
        for (auto &c : factors) {
            // The pieces gcd(c, v - s) over all s refine c completely for
            // this v; pieces already cut off cannot split again under v.
            ModPoly rem_c = std::move(c);
            for (uint64_t s = 0; s < p && mp_deg(rem_c) >= 1; ++s) {
                ModPoly shifted = v;
                shifted[0] = (shifted[0] + p - s) % p;
                mp_trim(shifted);
                ModPoly g = mp_gcd(rem_c, shifted, p);
                if (mp_deg(g) < 1) continue;
                if (mp_deg(g) == mp_deg(rem_c)) break; // v === s on every factor left
                next.push_back(g);
                rem_c = mp_quot(rem_c, g, p);
            }
            if (mp_deg(rem_c) >= 1) next.push_back(std::move(rem_c));
        }
        factors = std::move(next);
        if (factors.size() == r) break;
    }
    return factors;
}

// --- Hensel lifting ---------------------------------------------------------

IntPoly int_poly_mod(const IntPoly &a, const Integer &m, bool symmetric) {
    std::vector<Integer> c(a.coeffs());
    for (auto &x : c) {
        x %= m;
        if (x < 0) x += m;
        if (symmetric && 2 * x > m) x -= m;
    }
    return IntPoly(std::move(c));
}

IntPoly from_mod_poly(const ModPoly &a) {
    std::vector<Integer> c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = Integer(static_cast<unsigned long>(a[i]));
    return IntPoly(std::move(c));
}

// Lift f === lc(f) * prod fbar_i (mod p), fbar_i monic and pairwise coprime,
// to F_i === fbar_i (mod p), F_i monic mod p^e, f === lc(f) * prod F_i (mod p^e).
std::vector<IntPoly> hensel_lift(const IntPoly &f, const std::vector<ModPoly> &fbar,
                                 uint64_t p, unsigned long e) {
    const size_t r = fbar.size();
    const Integer &lc = f.leading();
    uint64_t lc_inv = invmod(mpz_fdiv_ui(lc.get_mpz_t(), p), p);

    // Bezout basis: sigma_i * prod_{j != i} fbar_j === 1 (mod p, prod fbar).
    std::vector<ModPoly> sigma(r);
    for (size_t i = 0; i < r; ++i) {
        ModPoly rest = {1};
        for (size_t j = 0; j < r; ++j)
            if (j != i) rest = mp_rem(mp_mul(rest, fbar[j], p), fbar[i], p);
        ModPoly s;
        ModPoly g = mp_ext_gcd(rest, fbar[i], p, s);
        if (mp_deg(g) != 0) throw std::logic_error("modular factors not coprime");
        sigma[i] = s;
    }

    std::vector<IntPoly> F(r);
    for (size_t i = 0; i < r; ++i) F[i] = from_mod_poly(fbar[i]);

    Integer m(static_cast<unsigned long>(p));
    const Integer pI(static_cast<unsigned long>(p));
    for (unsigned long step = 1; step < e; ++step) {
        IntPoly prod = IntPoly::constant(lc);
        for (const auto &Fi : F) prod = prod * Fi;
        IntPoly E = f - prod;
        // E === 0 (mod m); the correction solves the step mod m*p.
        std::vector<Integer> ec(E.coeffs());
        for (auto &x : ec) {
            Integer q;
            mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
            x = q;
        }
        ModPoly ebar = reduce_mod(IntPoly(std::move(ec)), p);
        for (size_t i = 0; i < r; ++i) {
            ModPoly d = mp_rem(mp_mul(mp_mul(sigma[i], ebar, p), {lc_inv}, p), fbar[i], p);
            if (d.empty()) continue;
            F[i] = F[i] + from_mod_poly(d).scaled(m);
        }
        m *= pI;
    }
    return F;
}

// --- recombination -----------------------------------------------------------

void sort_factors(std::vector<std::pair<IntPoly, int>> &factors) {
    std::sort(factors.begin(), factors.end(), [](const auto &a, const auto &b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        for (long i = a.first.degree(); i >= 0; --i) {
            int c = cmp(a.first.coeff(i), b.first.coeff(i));
            if (c != 0) return c < 0;
        }
        return a.second < b.second;
    });
}

// Candidate primes tried for the modular factorization. Polynomials whose
// reduction is non-squarefree at every one of these would need a discriminant
// divisible by all of them; treat that as an internal error.
constexpr uint64_t kFactorPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                      43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
                                      101, 103, 107, 109, 113, 127, 131, 137, 139, 149};

// Irreducible factors of a primitive squarefree polynomial with positive
// leading coefficient, degree >= 1.
std::vector<IntPoly> factor_squarefree(const IntPoly &g) {
    if (g.degree() == 1) return {g};

    // Modular screen: pick the good prime with the fewest modular factors.
    uint64_t best_p = 0;
    std::vector<ModPoly> best_split;
    int good_found = 0;
    for (uint64_t p : kFactorPrimes) {
        if (mpz_fdiv_ui(g.leading().get_mpz_t(), p) == 0) continue;
        ModPoly gbar = mp_monic(reduce_mod(g, p), p);
        ModPoly gcd = mp_gcd(gbar, mp_derivative(gbar, p), p);
        if (mp_deg(gcd) != 0) continue; // not squarefree mod p
        std::vector<ModPoly> split = berlekamp_factor(gbar, p);
        if (split.size() == 1) return {g}; // irreducible mod p, hence over Q
        if (best_p == 0 || split.size() < best_split.size()) {
            best_p = p;
            best_split = std::move(split);
        }
        if (++good_found >= 4) break;
    }
    if (best_p == 0) throw std::logic_error("no usable prime for modular factorization");

    // Landau-Mignotte style height bound for lc(f)-adjusted factors of f.
    const uint64_t p = best_p;
    Integer norm2_sq = 0;
    for (const auto &c : g.coeffs()) norm2_sq += c * c;
    Integer norm2;
    mpz_sqrt(norm2.get_mpz_t(), norm2_sq.get_mpz_t());
    norm2 += 1;
    Integer bound = (Integer(1) << static_cast<unsigned long>(g.degree() + 1)) * norm2 * abs(g.leading());
    unsigned long e = 1;
    Integer pe(static_cast<unsigned long>(p));
    while (pe < 2 * bound + 1) {
        pe *= static_cast<unsigned long>(p);
        ++e;
    }

    std::vector<IntPoly> lifted = hensel_lift(g, best_split, p, e);

    // Subset recombination over the lifted factors.
    std::vector<IntPoly> out;
    std::vector<size_t> live(lifted.size());
    for (size_t i = 0; i < live.size(); ++i) live[i] = i;
    IntPoly rem = g;
    size_t card = 1;
    while (2 * card <= live.size()) {
        // All cardinality-card subsets of live, in lexicographic order.
        std::vector<size_t> idx(card);
        for (size_t i = 0; i < card; ++i) idx[i] = i;
        bool removed = false;
        while (true) {
            IntPoly cand = IntPoly::constant(rem.leading());
            for (size_t i : idx) cand = int_poly_mod(cand * lifted[live[i]], pe, true);
            IntPoly candpp = primitive_part(cand);
            IntPoly q;
            if (!candpp.is_zero() && divides(rem, candpp, q)) {
                out.push_back(candpp);
                rem = q;
                std::vector<size_t> nl;
                for (size_t i = 0; i < live.size(); ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end()) nl.push_back(live[i]);
                live = std::move(nl);
                removed = true;
                break;
            }
            // next subset
            long pos = static_cast<long>(card) - 1;
            while (pos >= 0 && idx[static_cast<size_t>(pos)] == live.size() - card + static_cast<size_t>(pos)) --pos;
            if (pos < 0) break;
            ++idx[static_cast<size_t>(pos)];
            for (size_t i = static_cast<size_t>(pos) + 1; i < card; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (!removed) ++card;
    }
    if (rem.degree() >= 1) out.push_back(rem);
    return out;
}

} // namespace

FactoredPoly factor_poly(const IntPoly &p) {
    if (p.is_zero()) throw std::invalid_argument("factoring the zero polynomial");
    FactoredPoly out;
    out.unit = Rational(content(p));
    IntPoly f = primitive_part(p);
    if (f.degree() >= 1) {
        // Pull out the power of x first so every squarefree part has a
        // nonzero constant term.
        long k = 0;
        while (f.coeff(k) == 0) ++k;
        if (k > 0) {
            out.factors.emplace_back(IntPoly::x_power(1), static_cast<int>(k));
            std::vector<Integer> shifted(f.coeffs().begin() + k, f.coeffs().end());
            f = IntPoly(std::move(shifted));
        }
        for (auto &[part, mult] : squarefree_decomposition(f)) {
            for (auto &irr : factor_squarefree(part)) out.factors.emplace_back(std::move(irr), mult);
        }
    }
    sort_factors(out.factors);

    IntPoly check = IntPoly::constant(1);
    for (const auto &[fac, mult] : out.factors)
        for (int i = 0; i < mult; ++i) check = check * fac;
    Integer unit_num = out.unit.get_num();
    if (check.scaled(unit_num) != p) throw std::logic_error("factorization failed to reassemble");
    return out;
}

FactoredPoly factor_poly(const std::vector<Rational> &coeffs) {
    Rational scale;
    IntPoly z = clear_denominators(coeffs, scale);
    if (z.is_zero()) throw std::invalid_argument("factoring the zero polynomial");
    FactoredPoly out = factor_poly(z);
    out.unit *= scale;
    return out;
}

} // namespace newforms
