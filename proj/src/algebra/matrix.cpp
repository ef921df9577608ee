#include "algebra/matrix.hpp"

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace newforms {

namespace {

// Dimension at which charpoly switches from division-free Berkowitz to
// multi-prime CRT with Hessenberg reduction.
constexpr long kCharpolyCrtThreshold = 12;

} // namespace

RationalMatrix RationalMatrix::identity(long n) {
    RationalMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix &o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    RationalMatrix r(rows_, o.cols_);
    Rational tmp;
    for (long i = 0; i < rows_; ++i) {
        for (long k = 0; k < cols_; ++k) {
            const Rational &a = at(i, k);
            if (a == 0) continue;
            for (long j = 0; j < o.cols_; ++j) {
                const Rational &b = o.at(k, j);
                if (b == 0) continue;
                tmp = a * b;
                r.at(i, j) += tmp;
            }
        }
    }
    return r;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix &o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    RationalMatrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix &o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix diff shape mismatch");
    RationalMatrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

RationalMatrix RationalMatrix::scaled(const Rational &s) const {
    RationalMatrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
    return r;
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix r(cols_, rows_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool RationalMatrix::is_zero() const {
    for (const auto &x : e_)
        if (x != 0) return false;
    return true;
}

RationalMatrix RationalMatrix::augmented_cols(const RationalMatrix &o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("augment shape mismatch");
    RationalMatrix r(rows_, cols_ + o.cols_);
    for (long i = 0; i < rows_; ++i) {
        for (long j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (long j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

RationalMatrix RationalMatrix::stacked_rows(const RationalMatrix &o) const {
    if (cols_ != o.cols_) throw std::invalid_argument("stack shape mismatch");
    RationalMatrix r(rows_ + o.rows_, cols_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (long i = 0; i < o.rows_; ++i)
        for (long j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
}

std::vector<long> rref_in_place(RationalMatrix &m) {
    std::vector<long> pivots;
    long row = 0;
    for (long col = 0; col < m.cols() && row < m.rows(); ++col) {
        long piv = -1;
        for (long r = row; r < m.rows(); ++r) {
            if (m.at(r, col) != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != row)
            for (long j = col; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(row, j));
        Rational inv = m.at(row, col);
        if (inv != 1)
            for (long j = col; j < m.cols(); ++j)
                if (m.at(row, j) != 0) m.at(row, j) /= inv;
        for (long r = 0; r < m.rows(); ++r) {
            if (r == row) continue;
            const Rational f = m.at(r, col);
            if (f == 0) continue;
            for (long j = col; j < m.cols(); ++j) {
                const Rational &x = m.at(row, j);
                if (x != 0) m.at(r, j) -= f * x;
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::pair<RationalMatrix, std::vector<long>> rref(const RationalMatrix &m) {
    RationalMatrix r = m;
    auto pivots = rref_in_place(r);
    return {std::move(r), std::move(pivots)};
}

long rank(const RationalMatrix &m) {
    RationalMatrix r = m;
    return static_cast<long>(rref_in_place(r).size());
}

RationalMatrix kernel(const RationalMatrix &m) {
    RationalMatrix r = m;
    std::vector<long> pivots = rref_in_place(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (long p : pivots) is_pivot[p] = true;
    std::vector<long> free_cols;
    for (long c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    RationalMatrix basis(m.cols(), static_cast<long>(free_cols.size()));
    for (size_t fi = 0; fi < free_cols.size(); ++fi) {
        long fc = free_cols[fi];
        basis.at(fc, static_cast<long>(fi)) = 1;
        for (size_t r2 = 0; r2 < pivots.size(); ++r2)
            basis.at(pivots[r2], static_cast<long>(fi)) = -r.at(static_cast<long>(r2), fc);
    }
    return basis;
}

namespace {

// --- Berkowitz: division-free characteristic polynomial over Z ------------

// Input integer matrix, output monic charpoly coefficients highest-first.
std::vector<Integer> berkowitz(const std::vector<std::vector<Integer>> &a) {
    const long n = static_cast<long>(a.size());
    std::vector<Integer> q = {Integer(1)};
    if (n == 0) return q;
    q = {Integer(1), -a[0][0]};
    for (long r = 2; r <= n; ++r) {
        // Scalars s_j = R * Mprev^j * C, j = 0..r-2, with Mprev the leading
        // (r-1)x(r-1) block, R the new row, C the new column.
        std::vector<Integer> w(r - 1);
        for (long i = 0; i < r - 1; ++i) w[i] = a[i][r - 1];
        std::vector<Integer> v(static_cast<size_t>(r) + 1);
        v[0] = 1;
        v[1] = -a[r - 1][r - 1];
        for (long j = 0; j <= r - 2; ++j) {
            Integer s = 0;
            for (long i = 0; i < r - 1; ++i) s += a[r - 1][i] * w[i];
            v[static_cast<size_t>(j) + 2] = -s;
            if (j < r - 2) {
                std::vector<Integer> w2(r - 1);
                for (long i = 0; i < r - 1; ++i) {
                    Integer acc = 0;
                    for (long t = 0; t < r - 1; ++t) acc += a[i][t] * w[t];
                    w2[i] = acc;
                }
                w.swap(w2);
            }
        }
        // q_new = prefix of conv(v, q) of length r+1.
        std::vector<Integer> qn(static_cast<size_t>(r) + 1);
        for (size_t i = 0; i < qn.size(); ++i) {
            Integer acc = 0;
            for (size_t j = 0; j <= i && j < v.size(); ++j) {
                size_t k = i - j;
                if (k < q.size()) acc += v[j] * q[k];
            }
            qn[i] = acc;
        }
        q.swap(qn);
    }
    return q;
}

// --- Hessenberg charpoly mod p, for the CRT path ---------------------------

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

uint64_t powmod_u64(uint64_t b, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = mulmod_u64(r, b, p);
        b = mulmod_u64(b, b, p);
        e >>= 1;
    }
    return r;
}

uint64_t invmod_u64(uint64_t a, uint64_t p) { return powmod_u64(a % p, p - 2, p); }

// Monic charpoly of an n x n matrix mod prime p, coefficients lowest-first.
std::vector<uint64_t> charpoly_mod_p(std::vector<std::vector<uint64_t>> h, uint64_t p) {
    const long n = static_cast<long>(h.size());
    // Reduce to upper Hessenberg form by similarity transforms.
    for (long m = 1; m + 1 <= n; ++m) {
        long piv = -1;
        for (long r = m; r < n; ++r) {
            if (h[r][m - 1] % p != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != m) {
            h[piv].swap(h[m]);
            for (long r = 0; r < n; ++r) std::swap(h[r][piv], h[r][m]);
        }
        uint64_t tinv = invmod_u64(h[m][m - 1], p);
        for (long i = m + 1; i < n; ++i) {
            uint64_t u = h[i][m - 1] % p;
            if (u == 0) continue;
            u = mulmod_u64(u, tinv, p);
            for (long j = 0; j < n; ++j) {
                uint64_t sub = mulmod_u64(u, h[m][j], p);
                h[i][j] = (h[i][j] + p - sub) % p;
            }
            for (long r = 0; r < n; ++r) {
                uint64_t add = mulmod_u64(u, h[r][i], p);
                h[r][m] = (h[r][m] + add) % p;
            }
        }
    }
    // Charpoly recurrence on the Hessenberg form (Cohen 2.2.9).
    std::vector<std::vector<uint64_t>> pm(static_cast<size_t>(n) + 1);
    pm[0] = {1 % p};
    for (long m = 1; m <= n; ++m) {
        const auto &prev = pm[m - 1];
        std::vector<uint64_t> cur(static_cast<size_t>(m) + 1, 0);
        uint64_t d = h[m - 1][m - 1] % p;
        for (size_t i = 0; i < prev.size(); ++i) {
            cur[i + 1] = (cur[i + 1] + prev[i]) % p;
            uint64_t sub = mulmod_u64(d, prev[i], p);
            cur[i] = (cur[i] + p - sub) % p;
        }
        uint64_t sprod = 1 % p;
        for (long i = m - 1; i >= 1; --i) {
            sprod = mulmod_u64(sprod, h[i][i - 1], p);
            uint64_t coef = mulmod_u64(h[i - 1][m - 1] % p, sprod, p);
            if (coef == 0) continue;
            const auto &pi = pm[i - 1];
            for (size_t j = 0; j < pi.size(); ++j) {
                uint64_t sub = mulmod_u64(coef, pi[j], p);
                cur[j] = (cur[j] + p - sub) % p;
            }
        }
        pm[m] = std::move(cur);
    }
    return pm[n];
}

std::vector<Integer> charpoly_int_crt(const std::vector<std::vector<Integer>> &a) {
    const long n = static_cast<long>(a.size());
    Integer maxabs = 0;
    for (const auto &row : a)
        for (const auto &x : row)
            if (abs(x) > maxabs) maxabs = abs(x);
    if (maxabs == 0) {
        // Nilpotent-trivial shortcut: charpoly of 0 is x^n.
        std::vector<Integer> c(static_cast<size_t>(n) + 1, Integer(0));
        c[0] = 1;
        return c;
    }
    // |c_{n-i}| <= C(n,i) * (sqrt(i)*maxabs)^i (sum of principal i x i minors,
    // Hadamard bound per minor). Take the max over i.
    Integer bound = 1;
    for (long i = 1; i <= n; ++i) {
        Integer binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(i));
        Integer root;
        mpz_sqrt(root.get_mpz_t(), Integer(i).get_mpz_t());
        root += 1;
        Integer term = binom * int_pow(root * maxabs, static_cast<unsigned long>(i));
        if (term > bound) bound = term;
    }
    bound = 2 * bound + 1;

    std::vector<uint64_t> primes;
    Integer prod = 1;
    Integer p = Integer(1) << 62;
    while (prod < bound) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        primes.push_back(mpz_get_ui(p.get_mpz_t()));
        prod *= p;
    }

    std::vector<Integer> coeffs(static_cast<size_t>(n) + 1, Integer(0));
    Integer mod_so_far = 1;
    for (uint64_t pr : primes) {
        std::vector<std::vector<uint64_t>> am(n, std::vector<uint64_t>(n));
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j)
                am[i][j] = mpz_fdiv_ui(a[i][j].get_mpz_t(), pr);
        std::vector<uint64_t> cp = charpoly_mod_p(am, pr);
        // Incremental CRT per coefficient, symmetric lift at the end.
        Integer prI(static_cast<unsigned long>(pr));
        if (mod_so_far == 1) {
            for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = Integer(static_cast<unsigned long>(cp[i]));
        } else {
            Integer inv;
            if (mpz_invert(inv.get_mpz_t(), mod_so_far.get_mpz_t(), prI.get_mpz_t()) == 0)
                throw std::logic_error("CRT moduli not coprime");
            for (size_t i = 0; i < coeffs.size(); ++i) {
                Integer cur = coeffs[i] % prI;
                if (cur < 0) cur += prI;
                Integer delta = (Integer(static_cast<unsigned long>(cp[i])) - cur) % prI;
                if (delta < 0) delta += prI;
                coeffs[i] += mod_so_far * ((delta * inv) % prI);
            }
        }
        mod_so_far *= prI;
    }
    for (auto &c : coeffs) {
        c %= mod_so_far;
        if (c < 0) c += mod_so_far;
        if (2 * c > mod_so_far) c -= mod_so_far;
    }
    return coeffs;
}

} // namespace

std::vector<Rational> charpoly(const RationalMatrix &m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("charpoly needs a square matrix");
    const long n = m.rows();
    if (n == 0) return {Rational(1)};
    // Scale to an integer matrix A = d*M; charpoly_M(x) = charpoly_A(d x)/d^n.
    Integer d = 1;
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) d = int_lcm(d, m.at(i, j).get_den());
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            Rational scaled = m.at(i, j) * Rational(d);
            assert(is_integer(scaled));
            a[i][j] = scaled.get_num();
        }

    std::vector<Integer> ci;
    if (n <= kCharpolyCrtThreshold) {
        std::vector<Integer> hf = berkowitz(a); // highest-first
        ci.assign(hf.rbegin(), hf.rend());      // lowest-first
    } else {
        ci = charpoly_int_crt(a); // lowest-first
    }

    std::vector<Rational> out(static_cast<size_t>(n) + 1);
    // Coefficient of x^i in charpoly_M is c_i / d^(n-i).
    for (long i = 0; i <= n; ++i)
        out[i] = make_rational(ci[i], int_pow(d, static_cast<unsigned long>(n - i)));
    return out;
}

RationalMatrix poly_at_matrix(const std::vector<Rational> &coeffs, const RationalMatrix &m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("poly_at_matrix needs a square matrix");
    const long n = m.rows();
    RationalMatrix acc(n, n);
    // Horner from the top coefficient.
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * m;
        if (*it != 0)
            for (long i = 0; i < n; ++i) acc.at(i, i) += *it;
    }
    return acc;
}

} // namespace newforms
