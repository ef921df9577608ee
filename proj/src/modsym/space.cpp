#include "modsym/space.hpp"

#include "algebra/arith.hpp"
#include "modsym/dimensions.hpp"
#include "modsym/heilbronn.hpp"

#include <cassert>
#include <mutex>
#include <utility>

namespace newforms {

namespace {

long mod_reduce(const Integer &a, long m) {
    if (m == 1) return 0;
    return static_cast<long>(mpz_fdiv_ui(a.get_mpz_t(), static_cast<unsigned long>(m)));
}

// Coefficients of P(aX+bY, cX+dY) for P given on the monomial basis
// X^l Y^(k-2-l), lowest l first.
std::vector<Integer> substitute(const std::vector<Integer> &coeffs, const Integer &a,
                                const Integer &b, const Integer &c, const Integer &d, long k) {
    // Entries here can exceed long, so expand directly instead of going
    // through monomial_action.
    long m = k - 2;
    std::vector<Integer> out(m + 1, Integer(0));
    for (long s = 0; s <= m; ++s) {
        if (coeffs[s] == 0) continue;
        // (aX+bY)^s
        std::vector<Integer> first(s + 1);
        for (long i = 0; i <= s; ++i) {
            Integer bin;
            mpz_bin_uiui(bin.get_mpz_t(), static_cast<unsigned long>(s),
                         static_cast<unsigned long>(i));
            first[i] = bin * int_pow(a, i) * int_pow(b, s - i);
        }
        std::vector<Integer> second(m - s + 1);
        for (long i = 0; i <= m - s; ++i) {
            Integer bin;
            mpz_bin_uiui(bin.get_mpz_t(), static_cast<unsigned long>(m - s),
                         static_cast<unsigned long>(i));
            second[i] = bin * int_pow(c, i) * int_pow(d, m - s - i);
        }
        for (long i = 0; i <= s; ++i)
            for (long j = 0; j <= m - s; ++j)
                out[i + j] += coeffs[s] * first[i] * second[j];
    }
    return out;
}

void accumulate_gen(std::vector<Rational> &out, const ManinBasis &mb, long monomial,
                    long point, const Rational &scale) {
    if (scale == 0) return;
    const RationalMatrix &g2b = mb.gen_to_basis();
    long g = mb.gen_index(monomial, point);
    for (long r = 0; r < g2b.rows(); ++r) {
        const Rational &e = g2b.at(r, g);
        if (e != 0) out[static_cast<size_t>(r)] += scale * e;
    }
}

// Q{infinity, num/den} expanded into Manin symbols of `target` via the
// continued-fraction convergents of num/den.
void accumulate_infty_path(std::vector<Rational> &out, const std::vector<Integer> &q_coeffs,
                           Integer num, Integer den, ModSymSpace &target, const Rational &scale) {
    if (den == 0) return;  // {infinity, infinity} contributes nothing
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long k = target.weight();
    long big_m = target.level();
    const ManinBasis &mb = target.manin();

    Integer p_prev(1), q_prev(0);  // convergent j-1
    Integer p_cur, q_cur;          // convergent j
    long j = 0;
    while (true) {
        Integer a = floor_div(num, den);
        Integer rem = num - a * den;
        if (j == 0) {
            p_cur = a;
            q_cur = 1;
        } else {
            Integer p_new = a * p_cur + p_prev;
            Integer q_new = a * q_cur + q_prev;
            p_prev = p_cur;
            q_prev = q_cur;
            p_cur = p_new;
            q_cur = q_new;
        }
        // g_j = [p_j, +-p_{j-1}; q_j, +-q_{j-1}] in SL2(Z), sign (-1)^(j-1)
        long sgn = (j % 2 == 0) ? -1 : 1;
        Integer ga = p_cur, gb = sgn * p_prev, gc = q_cur, gd = sgn * q_prev;
        std::vector<Integer> piece(q_coeffs.size());
        {
            std::vector<Integer> sub = substitute(q_coeffs, ga, gb, gc, gd, k);
            piece = std::move(sub);
        }
        long idx = mb.p1().index_of(mod_reduce(gc, big_m), mod_reduce(gd, big_m));
        if (idx < 0) throw std::logic_error("continued-fraction row not coprime");
        for (long l = 0; l + 2 <= k; ++l)
            if (piece[l] != 0) accumulate_gen(out, mb, l, idx, scale * Rational(piece[l]));
        if (rem == 0) break;
        num = den;
        den = rem;
        ++j;
    }
}

std::mutex space_cache_mutex;
std::map<std::pair<long, long>, std::shared_ptr<ModSymSpace>> space_cache;

}  // namespace

Subspace column_span(const RationalMatrix &vectors) {
    auto [r, pivots] = rref(vectors.transposed());
    long d = static_cast<long>(pivots.size());
    RationalMatrix basis(vectors.rows(), d);
    for (long i = 0; i < d; ++i)
        for (long c = 0; c < r.cols(); ++c)
            basis.at(c, i) = r.at(i, c);
    return Subspace{std::move(basis), std::move(pivots)};
}

RationalMatrix restrict_operator(const RationalMatrix &op, const Subspace &sub) {
    RationalMatrix image = op * sub.basis;
    long d = sub.dim();
    RationalMatrix res(d, d);
    for (long r = 0; r < d; ++r)
        for (long c = 0; c < d; ++c) res.at(r, c) = image.at(sub.pivot_rows[r], c);
    if (sub.basis * res != image)
        throw std::logic_error("operator does not preserve the subspace");
    return res;
}

Subspace intersect_kernel(const RationalMatrix &op, const Subspace &sub) {
    RationalMatrix ker = kernel(op * sub.basis);
    return column_span(sub.basis * ker);
}

ModSymSpace::ModSymSpace(long level, long weight)
    : level_(level), weight_(weight), manin_(level, weight) {}

const RationalMatrix &ModSymSpace::star_matrix() {
    if (star_) return *star_;
    long n = ambient_dim();
    const ManinBasis &mb = manin_;
    RationalMatrix m(n, n);
    std::vector<Rational> col(n);
    for (long b = 0; b < n; ++b) {
        long g = mb.basis_gens()[b];
        long i = mb.gen_monomial(g);
        auto [u, v] = mb.p1().rep(mb.gen_point(g));
        long idx = mb.p1().index_of((level_ - u) % level_, v);
        std::fill(col.begin(), col.end(), Rational(0));
        accumulate_gen(col, mb, i, idx, (i % 2 == 0) ? Rational(1) : Rational(-1));
        for (long r = 0; r < n; ++r) m.at(r, b) = col[static_cast<size_t>(r)];
    }
    star_ = std::make_unique<RationalMatrix>(std::move(m));
    return *star_;
}

long ModSymSpace::cusp_class_index(long p, long q) {
    if (q < 0) {
        p = -p;
        q = -q;
    }
    if (q == 0) {
        p = 1;
    } else {
        long g = gcd_long(p < 0 ? -p : p, q);
        if (g > 1) {
            p /= g;
            q /= g;
        }
    }
    auto inverse_mod = [](long a, long m) -> long {
        if (m == 0) return 1;  // p/0 reduced to 1/0, inverse of 1
        if (m == 1) return 0;
        long s = 0, t = 0;
        ext_gcd_long(a, m, s, t);
        long r = s % m;
        if (r < 0) r += m;
        return r;
    };
    long s2 = inverse_mod(p, q);
    for (size_t c = 0; c < cusp_classes_.size(); ++c) {
        auto [p1c, q1c] = cusp_classes_[c];
        long s1 = inverse_mod(p1c, q1c);
        long g = gcd_long(q1c * q, level_);
        if (g == 0) g = level_;
        long lhs = ((s1 * q - s2 * q1c) % g + g) % g;
        if (lhs == 0) return static_cast<long>(c);
    }
    cusp_classes_.emplace_back(p, q);
    return static_cast<long>(cusp_classes_.size()) - 1;
}

const RationalMatrix &ModSymSpace::boundary_matrix() {
    if (boundary_) return *boundary_;
    long n = ambient_dim();
    const ManinBasis &mb = manin_;
    // (row, col, value) triplets; the row count is only known at the end.
    std::vector<std::tuple<long, long, long>> entries;
    for (long b = 0; b < n; ++b) {
        long g = mb.basis_gens()[b];
        long i = mb.gen_monomial(g);
        auto [u, v] = mb.p1().rep(mb.gen_point(g));
        SL2Lift lift = lift_to_sl2(u, v, level_);
        // boundary of (P ada g){g 0, g infinity} = P(1,0)[a/c] - P(0,1)[b/d];
        // the monomial P contributes only at i = k-2 resp. i = 0.
        if (i == weight_ - 2) entries.emplace_back(cusp_class_index(lift.a, lift.c), b, 1);
        if (i == 0) entries.emplace_back(cusp_class_index(lift.b, lift.d), b, -1);
    }
    RationalMatrix m(static_cast<long>(cusp_classes_.size()), n);
    for (auto &[r, c, val] : entries) m.at(r, c) += val;
    boundary_ = std::make_unique<RationalMatrix>(std::move(m));
    return *boundary_;
}

const Subspace &ModSymSpace::cuspidal_plus() {
    if (cuspidal_plus_) return *cuspidal_plus_;
    long n = ambient_dim();
    RationalMatrix star_minus_one = star_matrix();
    for (long i = 0; i < n; ++i) star_minus_one.at(i, i) -= 1;
    RationalMatrix stacked = star_minus_one.stacked_rows(boundary_matrix());
    Subspace sub = column_span(kernel(stacked));
    if (sub.dim() != dim_cusp_forms(level_, weight_))
        throw std::logic_error("cuspidal subspace has unexpected dimension");
    cuspidal_plus_ = std::make_unique<Subspace>(std::move(sub));
    return *cuspidal_plus_;
}

const Subspace &ModSymSpace::new_plus() {
    if (new_plus_) return *new_plus_;
    Subspace sub = cuspidal_plus();
    for (auto &[p, e] : factorize(level_)) {
        (void)e;
        auto target = get(level_ / p, weight_);
        sub = intersect_kernel(degeneracy_matrix(*target, 1), sub);
        sub = intersect_kernel(degeneracy_matrix(*target, p), sub);
    }
    if (sub.dim() != dim_new_cusp_forms(level_, weight_))
        throw std::logic_error("new subspace has unexpected dimension");
    new_plus_ = std::make_unique<Subspace>(std::move(sub));
    return *new_plus_;
}

RationalMatrix ModSymSpace::hecke_matrix_prime(long p) {
    std::vector<HeilbronnMatrix> mats =
        (level_ % p == 0) ? heilbronn_merel(p) : heilbronn_cremona(p);
    long n = ambient_dim();
    const ManinBasis &mb = manin_;
    const RationalMatrix &g2b = mb.gen_to_basis();
    RationalMatrix m(n, n);
    for (const auto &h : mats) {
        auto w = monomial_action(h.a, h.b, h.c, h.d, weight_);
        for (long b = 0; b < n; ++b) {
            long g = mb.basis_gens()[b];
            long i = mb.gen_monomial(g);
            auto [u, v] = mb.p1().rep(mb.gen_point(g));
            long idx = mb.p1().index_of(
                ((u * h.a + v * h.c) % level_ + level_) % level_,
                ((u * h.b + v * h.d) % level_ + level_) % level_);
            if (idx < 0) continue;
            for (long l = 0; l + 2 <= weight_; ++l) {
                if (w[l][i] == 0) continue;
                Rational scale(w[l][i]);
                long gi = mb.gen_index(l, idx);
                for (long r = 0; r < n; ++r) {
                    const Rational &e = g2b.at(r, gi);
                    if (e != 0) m.at(r, b) += scale * e;
                }
            }
        }
    }
    return m;
}

const RationalMatrix &ModSymSpace::hecke_matrix(long n) {
    if (n <= 0) throw std::invalid_argument("hecke_matrix: n must be positive");
    auto it = hecke_cache_.find(n);
    if (it != hecke_cache_.end()) return it->second;
    RationalMatrix result(0, 0);
    if (n == 1) {
        result = RationalMatrix(ambient_dim(), ambient_dim());
        for (long i = 0; i < ambient_dim(); ++i) result.at(i, i) = 1;
    } else {
        auto factors = factorize(n);
        if (factors.size() == 1) {
            auto [p, e] = factors[0];
            if (e == 1) {
                result = hecke_matrix_prime(p);
            } else if (level_ % p == 0) {
                result = hecke_matrix(p) * hecke_matrix(n / p);
            } else {
                // T_{p^e} = T_p T_{p^(e-1)} - p^(k-1) T_{p^(e-2)}
                RationalMatrix rec =
                    hecke_matrix(n / (p * p))
                        .scaled(Rational(int_pow(Integer(p), static_cast<unsigned long>(weight_ - 1))));
                result = hecke_matrix(p) * hecke_matrix(n / p) - rec;
            }
        } else {
            auto [p, e] = factors[0];
            long q = 1;
            for (long i = 0; i < e; ++i) q *= p;
            result = hecke_matrix(q) * hecke_matrix(n / q);
        }
    }
    return hecke_cache_.emplace(n, std::move(result)).first->second;
}

std::vector<Rational> ModSymSpace::hecke_apply(long p, const std::vector<Rational> &v) {
    auto it = hecke_cache_.find(p);
    long n = ambient_dim();
    if (v.size() != static_cast<size_t>(n)) throw std::invalid_argument("hecke_apply size");
    std::vector<Rational> out(n, Rational(0));
    if (it != hecke_cache_.end()) {
        const RationalMatrix &m = it->second;
        for (long c = 0; c < n; ++c) {
            if (v[static_cast<size_t>(c)] == 0) continue;
            for (long r = 0; r < n; ++r) {
                const Rational &e = m.at(r, c);
                if (e != 0) out[static_cast<size_t>(r)] += e * v[static_cast<size_t>(c)];
            }
        }
        return out;
    }
    std::vector<HeilbronnMatrix> mats =
        (level_ % p == 0) ? heilbronn_merel(p) : heilbronn_cremona(p);
    const ManinBasis &mb = manin_;
    for (const auto &h : mats) {
        auto w = monomial_action(h.a, h.b, h.c, h.d, weight_);
        for (long b = 0; b < n; ++b) {
            const Rational &coeff = v[static_cast<size_t>(b)];
            if (coeff == 0) continue;
            long g = mb.basis_gens()[b];
            long i = mb.gen_monomial(g);
            auto [u, vv] = mb.p1().rep(mb.gen_point(g));
            long idx = mb.p1().index_of(
                ((u * h.a + vv * h.c) % level_ + level_) % level_,
                ((u * h.b + vv * h.d) % level_ + level_) % level_);
            if (idx < 0) continue;
            for (long l = 0; l + 2 <= weight_; ++l)
                if (w[l][i] != 0) accumulate_gen(out, mb, l, idx, coeff * Rational(w[l][i]));
        }
    }
    return out;
}

const RationalMatrix &ModSymSpace::atkin_lehner_matrix(long q) {
    auto it = al_cache_.find(q);
    if (it != al_cache_.end()) return it->second;
    if (q <= 1 || level_ % q != 0 || gcd_long(q, level_ / q) != 1)
        throw std::invalid_argument("atkin_lehner_matrix: q must exactly divide the level");
    long s = 0, t = 0;
    if (ext_gcd_long(q, level_ / q, s, t) != 1) throw std::logic_error("atkin_lehner_matrix: gcd");
    // [qs, -t; N, q] has determinant q(qs + t N/q) = q
    Integer wa = Integer(q) * s, wb = -Integer(t), wc = Integer(level_), wd = Integer(q);
    long n = ambient_dim();
    RationalMatrix m(n, n);
    for (long col = 0; col < n; ++col) {
        long gen = manin_.basis_gens()[col];
        std::vector<Rational> image = left_action_image(manin_.gen_monomial(gen),
                                                        manin_.gen_point(gen), wa, wb, wc, wd, *this);
        for (long r = 0; r < n; ++r) m.at(r, col) = image[static_cast<size_t>(r)];
    }
    // act([qs,-t;N,q]) squares to q^(k-2) times the identity
    m = m.scaled(make_rational(1, int_pow(Integer(q), static_cast<unsigned long>((weight_ - 2) / 2))));
    return al_cache_.emplace(q, std::move(m)).first->second;
}

RationalMatrix ModSymSpace::degeneracy_matrix(ModSymSpace &target, long t) {
    long m_level = target.level();
    if (level_ % m_level != 0 || target.weight() != weight_)
        throw std::invalid_argument("degeneracy_matrix: target must divide the level");
    long n = ambient_dim();
    RationalMatrix result(target.ambient_dim(), n);
    const ManinBasis &mb = manin_;
    for (long b = 0; b < n; ++b) {
        long g = mb.basis_gens()[b];
        long i = mb.gen_monomial(g);
        auto [u, v] = mb.p1().rep(mb.gen_point(g));
        std::vector<Rational> image(target.ambient_dim(), Rational(0));
        if (t == 1) {
            long idx = target.manin().p1().index_of(u % m_level, v % m_level);
            if (idx < 0) throw std::logic_error("degeneracy reduction left P^1");
            accumulate_gen(image, target.manin(), i, idx, Rational(1));
        } else {
            if (t <= 0 || (level_ / m_level) % t != 0)
                throw std::invalid_argument("degeneracy_matrix: invalid t");
            image = left_action_image(i, mb.gen_point(g), Integer(t), Integer(0), Integer(0),
                                      Integer(1), target);
        }
        for (long r = 0; r < target.ambient_dim(); ++r)
            result.at(r, b) = image[static_cast<size_t>(r)];
    }
    return result;
}

std::vector<Rational> ModSymSpace::left_action_image(long i, long j, const Integer &a,
                                                     const Integer &b, const Integer &c,
                                                     const Integer &d, ModSymSpace &target) {
    auto [u, v] = manin_.p1().rep(j);
    SL2Lift g = lift_to_sl2(u, v, level_);
    // C = A * lift; the symbol becomes (P adj(C)){C 0, C infinity}
    Integer ca = a * g.a + b * g.c;
    Integer cb = a * g.b + b * g.d;
    Integer cc = c * g.a + d * g.c;
    Integer cd = c * g.b + d * g.d;
    long k = weight_;
    std::vector<Integer> p_coeffs(k - 1, Integer(0));
    p_coeffs[i] = 1;
    // P composed with adj(C) = [cd, -cb; -cc, ca]
    std::vector<Integer> q_coeffs = substitute(p_coeffs, cd, -cb, -cc, ca, k);
    std::vector<Rational> out(target.ambient_dim(), Rational(0));
    accumulate_infty_path(out, q_coeffs, ca, cc, target, Rational(1));
    accumulate_infty_path(out, q_coeffs, cb, cd, target, Rational(-1));
    return out;
}

std::shared_ptr<ModSymSpace> ModSymSpace::get(long level, long weight) {
    std::lock_guard<std::mutex> lock(space_cache_mutex);
    auto key = std::make_pair(level, weight);
    auto it = space_cache.find(key);
    if (it != space_cache.end()) return it->second;
    auto sp = std::make_shared<ModSymSpace>(level, weight);
    space_cache.emplace(key, sp);
    return sp;
}

}  // namespace newforms
