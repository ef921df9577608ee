#include "modsym/manin.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace newforms {

std::vector<std::vector<Integer>> monomial_action(long a, long b, long c, long d, long k) {
    const long deg = k - 2;
    if (deg < 0) throw std::invalid_argument("weight must be at least 2");
    std::vector<std::vector<Integer>> w(static_cast<size_t>(deg) + 1,
                                        std::vector<Integer>(static_cast<size_t>(deg) + 1, Integer(0)));
    for (long s = 0; s <= deg; ++s) {
        // (aX+bY)^s, coefficients by X-degree
        std::vector<Integer> top(static_cast<size_t>(s) + 1);
        for (long t = 0; t <= s; ++t) {
            Integer binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(s), static_cast<unsigned long>(t));
            top[static_cast<size_t>(t)] =
                binom * int_pow(Integer(a), static_cast<unsigned long>(t)) *
                int_pow(Integer(b), static_cast<unsigned long>(s - t));
        }
        // (cX+dY)^(deg-s)
        long s2 = deg - s;
        std::vector<Integer> bot(static_cast<size_t>(s2) + 1);
        for (long t = 0; t <= s2; ++t) {
            Integer binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(s2), static_cast<unsigned long>(t));
            bot[static_cast<size_t>(t)] =
                binom * int_pow(Integer(c), static_cast<unsigned long>(t)) *
                int_pow(Integer(d), static_cast<unsigned long>(s2 - t));
        }
        for (long t1 = 0; t1 <= s; ++t1)
            for (long t2 = 0; t2 <= s2; ++t2)
                w[static_cast<size_t>(t1 + t2)][static_cast<size_t>(s)] +=
                    top[static_cast<size_t>(t1)] * bot[static_cast<size_t>(t2)];
    }
    return w;
}

ManinBasis::ManinBasis(long N, long k) : N_(N), k_(k), p1_(N) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("weight must be even and at least 2");
    const long np = p1_.size();
    const long deg = k - 2;
    n_gens_ = (deg + 1) * np;

    // Two-term relations x + xS = 0 pair the generators; each class is either
    // zero, or carried by its first-seen representative with coefficient +-1.
    std::vector<Rational> rep_coeff(n_gens_, Rational(0));
    std::vector<long> rep_gen(n_gens_, -1);
    std::vector<bool> seen(n_gens_, false);
    for (long i = 0; i <= deg; ++i) {
        for (long j = 0; j < np; ++j) {
            long g = gen_index(i, j);
            if (seen[g]) continue;
            auto [u, v] = p1_.rep(j);
            long jS = p1_.index_of(v, -u);
            long gS = gen_index(deg - i, jS);
            long sign = (i % 2 == 0) ? 1 : -1;
            seen[g] = true;
            if (gS == g) {
                if (sign == 1) {
                    rep_coeff[g] = 0; // 2x = 0
                    rep_gen[g] = g;
                } else {
                    rep_coeff[g] = 1;
                    rep_gen[g] = g;
                }
                continue;
            }
            seen[gS] = true;
            rep_coeff[g] = 1;
            rep_gen[g] = g;
            rep_coeff[gS] = -sign;
            rep_gen[gS] = g;
        }
    }

    std::vector<long> free_gens;
    std::vector<long> free_index(n_gens_, -1);
    for (long g = 0; g < n_gens_; ++g) {
        if (rep_gen[g] == g && rep_coeff[g] == 1) {
            free_index[g] = static_cast<long>(free_gens.size());
            free_gens.push_back(g);
        }
    }
    const long n_free = static_cast<long>(free_gens.size());

    // Three-term relations x + xT + xT^2 = 0, written over the free
    // generators. The same relation arises from g, gT and gT^2; dedupe on a
    // scaled canonical form.
    auto wT = monomial_action(0, -1, 1, -1, k);
    auto wT2 = monomial_action(-1, 1, -1, 0, k);
    std::map<std::string, std::vector<std::pair<long, Rational>>> unique_rows;
    for (long i = 0; i <= deg; ++i) {
        for (long j = 0; j < np; ++j) {
            auto [u, v] = p1_.rep(j);
            long jT = p1_.index_of(v, -u - v);
            long jT2 = p1_.index_of(-u - v, u);
            std::map<long, Rational> row;
            auto add = [&](long h, const Integer &c) {
                if (rep_coeff[h] == 0 || c == 0) return;
                long f = free_index[rep_gen[h]];
                row[f] += rep_coeff[h] * Rational(c);
            };
            add(gen_index(i, j), Integer(1));
            for (long l = 0; l <= deg; ++l) {
                add(gen_index(l, jT), wT[static_cast<size_t>(l)][static_cast<size_t>(i)]);
                add(gen_index(l, jT2), wT2[static_cast<size_t>(l)][static_cast<size_t>(i)]);
            }
            std::vector<std::pair<long, Rational>> entries;
            for (auto &[col, val] : row)
                if (val != 0) entries.emplace_back(col, val);
            if (entries.empty()) continue;
            Rational lead = entries.front().second;
            for (auto &[col, val] : entries) val /= lead;
            std::ostringstream key;
            for (auto &[col, val] : entries) key << col << ":" << val.get_str() << ";";
            unique_rows.emplace(key.str(), std::move(entries));
        }
    }

    RationalMatrix rel(static_cast<long>(unique_rows.size()), n_free);
    long r = 0;
    for (auto &[key, entries] : unique_rows) {
        (void)key;
        for (auto &[col, val] : entries) rel.at(r, col) = val;
        ++r;
    }
    std::vector<long> pivots = rref_in_place(rel);

    std::vector<bool> is_pivot(n_free, false);
    for (long p : pivots) is_pivot[p] = true;
    std::vector<long> basis_col_of_free(n_free, -1);
    for (long f = 0; f < n_free; ++f) {
        if (!is_pivot[f]) {
            basis_col_of_free[f] = static_cast<long>(basis_gens_.size());
            basis_gens_.push_back(free_gens[f]);
        }
    }
    const long dim = static_cast<long>(basis_gens_.size());

    // Free generator -> basis expansion: non-pivots map to unit vectors,
    // pivot columns are eliminated by their rref row.
    RationalMatrix free_to_basis(dim, n_free);
    for (long f = 0; f < n_free; ++f) {
        if (!is_pivot[f]) {
            free_to_basis.at(basis_col_of_free[f], f) = 1;
        }
    }
    for (size_t pi = 0; pi < pivots.size(); ++pi) {
        long f = pivots[pi];
        for (long c = 0; c < n_free; ++c) {
            if (is_pivot[c] || rel.at(static_cast<long>(pi), c) == 0) continue;
            free_to_basis.at(basis_col_of_free[c], f) = -rel.at(static_cast<long>(pi), c);
        }
    }

    gen_to_basis_ = RationalMatrix(dim, n_gens_);
    for (long g = 0; g < n_gens_; ++g) {
        if (rep_coeff[g] == 0) continue;
        long f = free_index[rep_gen[g]];
        for (long b = 0; b < dim; ++b) {
            const Rational &x = free_to_basis.at(b, f);
            if (x != 0) gen_to_basis_.at(b, g) = rep_coeff[g] * x;
        }
    }
}

} // namespace newforms
