#include "modsym/decompose.hpp"

#include "algebra/arith.hpp"
#include "algebra/factor.hpp"
#include "algebra/kronecker.hpp"
#include "cm/quadfield.hpp"
#include "modsym/dimensions.hpp"

#include <algorithm>

namespace newforms {

namespace {

IntPoly int_poly_pow(const IntPoly &f, int e) {
    IntPoly out = IntPoly::constant(1);
    for (int i = 0; i < e; ++i) out = out * f;
    return out;
}

std::vector<Rational> rational_coeffs(const IntPoly &f) {
    std::vector<Rational> out;
    for (const Integer &c : f.coeffs()) out.emplace_back(c);
    return out;
}

// Primes not dividing the level, ascending, as many as the splitting loop
// may consume.
std::vector<long> splitting_primes(long level, long weight) {
    long bound = std::max<long>(sturm_bound(level, weight), 30);
    std::vector<long> out;
    for (long p : primes_up_to(bound))
        if (level % p != 0) out.push_back(p);
    return out;
}

struct Piece {
    Subspace span;  // coordinates of the new subspace
};

// Split `piece` along the factorization of charpoly(op restricted to it).
// Certified single orbits go to `orbits`, the rest to `pending`. Returns
// true when the piece was fully certified (no pending leftovers).
void split_piece(const RationalMatrix &op_new, const Piece &piece,
                 std::vector<Subspace> &orbit_spans, std::vector<Piece> &pending) {
    RationalMatrix op = restrict_operator(op_new, piece.span);
    FactoredPoly fp = factor_poly(charpoly(op));
    if (fp.is_irreducible()) {
        orbit_spans.push_back(piece.span);
        return;
    }
    long total = 0;
    for (auto &[f, e] : fp.factors) {
        RationalMatrix ker = kernel(poly_at_matrix(rational_coeffs(int_poly_pow(f, e)), op));
        if (ker.cols() == 0) throw std::logic_error("primary component is empty");
        Subspace sub = column_span(piece.span.basis * ker);
        total += sub.dim();
        if (e == 1) {
            // charpoly of op on this kernel is the irreducible f itself
            orbit_spans.push_back(std::move(sub));
        } else {
            pending.push_back(Piece{std::move(sub)});
        }
    }
    if (total != piece.span.dim()) throw std::logic_error("primary decomposition lost dimensions");
}

std::string poly_key(const IntPoly &f) { return poly_to_string(f); }

}  // namespace

std::vector<NewformOrbit> newform_orbits(long level, long weight) {
    if (weight < 2 || weight % 2 != 0)
        throw std::invalid_argument("newform_orbits: weight must be even and >= 2");
    auto sp = ModSymSpace::get(level, weight);
    const Subspace &nw = sp->new_plus();
    long d = nw.dim();
    std::vector<NewformOrbit> orbits;
    if (d == 0) return orbits;

    // Operators restricted to the new subspace, built on demand.
    std::map<long, RationalMatrix> t_new;
    auto t_on_new = [&](long p) -> const RationalMatrix & {
        auto it = t_new.find(p);
        if (it != t_new.end()) return it->second;
        return t_new.emplace(p, restrict_operator(sp->hecke_matrix(p), nw)).first->second;
    };

    std::vector<long> primes = splitting_primes(level, weight);
    std::vector<Subspace> orbit_spans;
    std::vector<Piece> pending;
    {
        RationalMatrix full(d, d);
        for (long i = 0; i < d; ++i) full.at(i, i) = 1;
        pending.push_back(Piece{column_span(full)});
    }
    std::vector<long> used_primes;
    for (long p : primes) {
        if (pending.empty()) break;
        used_primes.push_back(p);
        std::vector<Piece> next;
        for (const Piece &piece : pending) split_piece(t_on_new(p), piece, orbit_spans, next);
        pending = std::move(next);
    }
    // Pieces where every single eigenvalue generates only a subfield: try
    // small combinations of two Hecke operators, which are still Hecke-stable.
    if (!pending.empty()) {
        std::vector<Piece> stuck;
        for (size_t i = 0; i + 1 < used_primes.size() && !pending.empty(); ++i) {
            for (long c = 1; c <= 5 && !pending.empty(); ++c) {
                RationalMatrix combo =
                    t_on_new(used_primes[i]) + t_on_new(used_primes[i + 1]).scaled(Rational(c));
                std::vector<Piece> next;
                for (const Piece &piece : pending) split_piece(combo, piece, orbit_spans, next);
                pending = std::move(next);
            }
        }
        if (!pending.empty())
            throw DecompositionError("could not certify a Hecke-stable piece as a single orbit");
    }

    // Atkin-Lehner signs and CM detection per orbit.
    std::vector<long> al_qs;
    for (auto &[p, e] : factorize(level)) {
        long q = 1;
        for (long i = 0; i < e; ++i) q *= p;
        al_qs.push_back(q);
    }
    std::vector<long> cm_candidates = cm_discriminants_for_level(level);
    long cm_bound = sturm_bound(level, weight);

    for (Subspace &span : orbit_spans) {
        NewformOrbit orb;
        orb.level = level;
        orb.weight = weight;
        orb.dim = span.dim();
        for (long q : al_qs) {
            RationalMatrix w = restrict_operator(restrict_operator(sp->atkin_lehner_matrix(q), nw), span);
            Rational s = w.at(0, 0);
            if (s != 1 && s != -1) throw std::logic_error("atkin-lehner restriction is not +-1");
            RationalMatrix expect(w.rows(), w.cols());
            for (long i = 0; i < w.rows(); ++i) expect.at(i, i) = s;
            if (w != expect) throw std::logic_error("atkin-lehner restriction is not scalar");
            orb.al_signs.emplace_back(q, s == 1 ? 1 : -1);
        }
        // CM test: an orbit has CM by Q(sqrt(D)) exactly when a_p vanishes
        // for every prime p inert in the field up to the Sturm bound.
        RationalMatrix ambient_basis = nw.basis * span.basis;
        for (long dd : cm_candidates) {
            bool vanishes = true;
            for (long p : primes_up_to(cm_bound)) {
                if (kronecker_symbol(dd, p) != -1) continue;
                for (long c = 0; c < ambient_basis.cols() && vanishes; ++c) {
                    std::vector<Rational> vec(ambient_basis.rows());
                    for (long r = 0; r < ambient_basis.rows(); ++r) vec[r] = ambient_basis.at(r, c);
                    for (const Rational &x : sp->hecke_apply(p, vec))
                        if (x != 0) {
                            vanishes = false;
                            break;
                        }
                }
                if (!vanishes) break;
            }
            if (vanishes) {
                if (orb.cm) throw std::logic_error("orbit has CM by two distinct fields");
                orb.cm = true;
                orb.cm_discriminant = dd;
            }
        }
        // Minimal polynomials of the first few eigenvalues, for reporting and
        // for a deterministic sort order.
        long shown = 0;
        for (long p : primes) {
            if (shown == 3) break;
            RationalMatrix op = restrict_operator(t_on_new(p), span);
            FactoredPoly fp = factor_poly(charpoly(op));
            // minimal polynomial: product of the distinct irreducible factors
            IntPoly mp = IntPoly::constant(1);
            for (auto &[f, e] : fp.factors) {
                (void)e;
                mp = mp * f;
            }
            orb.eigenvalue_minpolys.emplace_back(p, mp);
            ++shown;
        }
        orb.span = std::move(span);
        orbits.push_back(std::move(orb));
    }

    std::sort(orbits.begin(), orbits.end(), [](const NewformOrbit &a, const NewformOrbit &b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        for (size_t i = 0; i < a.eigenvalue_minpolys.size() && i < b.eigenvalue_minpolys.size(); ++i) {
            std::string ka = poly_key(a.eigenvalue_minpolys[i].second);
            std::string kb = poly_key(b.eigenvalue_minpolys[i].second);
            if (ka != kb) return ka < kb;
        }
        return false;
    });
    return orbits;
}

OrbitCounts orbit_counts(long level, long weight) {
    OrbitCounts out;
    for (const NewformOrbit &orb : newform_orbits(level, weight)) {
        ++out.total;
        if (orb.cm)
            ++out.cm;
        else
            ++out.ncm;
    }
    return out;
}

bool maeda_t2_irreducible(long weight) {
    auto sp = ModSymSpace::get(1, weight);
    const Subspace &c = sp->cuspidal_plus();
    if (c.dim() <= 1) return true;
    RationalMatrix t2 = restrict_operator(sp->hecke_matrix(2), c);
    return factor_poly(charpoly(t2)).is_irreducible();
}

}  // namespace newforms
