#pragma once

#include "algebra/matrix.hpp"
#include "modsym/manin.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

namespace newforms {

// Thrown when a requested computation exceeds a configured size budget.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A subspace of an ambient Q-vector space, stored as a column-echelon basis
// together with its pivot rows. The pivot rows let us read restrictions of
// invariant operators straight off a matrix product.
struct Subspace {
    RationalMatrix basis;          // ambient_dim x dim, reduced column echelon
    std::vector<long> pivot_rows;  // one per column, strictly increasing

    long dim() const { return basis.cols(); }
    long ambient() const { return basis.rows(); }
};

// Column-echelon subspace spanned by the columns of `vectors`.
Subspace column_span(const RationalMatrix &vectors);

// Restriction of `op` to an invariant subspace, in the subspace's own
// coordinates. Throws std::logic_error if the subspace is not invariant.
RationalMatrix restrict_operator(const RationalMatrix &op, const Subspace &sub);

// Intersection of a subspace with the kernel of `op` (as a subspace of the
// same ambient space).
Subspace intersect_kernel(const RationalMatrix &op, const Subspace &sub);

// Modular symbols of weight k for Gamma0(N) with the +1 star eigenvalue.
// Construction is lazy: each derived object (star involution, boundary map,
// cuspidal subspace, Hecke and Atkin-Lehner operators) is computed on first
// use and cached. Instances are shared through `get`, so degeneracy maps
// between levels reuse the target space's presentation.
class ModSymSpace {
public:
    ModSymSpace(long level, long weight);

    long level() const { return level_; }
    long weight() const { return weight_; }
    const ManinBasis &manin() const { return manin_; }
    long ambient_dim() const { return manin_.basis_size(); }

    const RationalMatrix &star_matrix();
    const RationalMatrix &boundary_matrix();

    // +1 eigenspace of star inside the kernel of the boundary map; its
    // dimension equals dim S_k(Gamma0(N)).
    const Subspace &cuspidal_plus();

    // Subspace of cuspidal_plus killed by all degeneracy maps to proper
    // divisor levels; its dimension equals the new-subspace dimension.
    const Subspace &new_plus();

    // Hecke operator on the ambient quotient, cached per n. n must be a
    // prime or a general positive integer (handled multiplicatively).
    const RationalMatrix &hecke_matrix(long n);

    // Image of a single ambient vector under T_p without forming the full
    // matrix; p must be prime.
    std::vector<Rational> hecke_apply(long p, const std::vector<Rational> &v);

    // Atkin-Lehner involution for an exact divisor Q of the level
    // (gcd(Q, N/Q) = 1), normalized so that the square is the identity.
    const RationalMatrix &atkin_lehner_matrix(long q);

    // Degeneracy map to level M = level/p for a prime p | level, ambient to
    // ambient. t selects the map: t = 1 reduces symbols, t = p acts by
    // [p,0;0,1] first. `target` must be the space at level M, same weight.
    RationalMatrix degeneracy_matrix(ModSymSpace &target, long t);

    // Image of [X^i Y^(k-2-i), lift(j)] under the left action of the integer
    // matrix [a,b;c,d] (nonzero determinant), expressed in the coordinates of
    // `target`'s quotient basis. Used for Atkin-Lehner, degeneracy maps, and
    // cross-checking Hecke operators against their coset definition.
    std::vector<Rational> left_action_image(long i, long j, const Integer &a,
                                            const Integer &b, const Integer &c,
                                            const Integer &d, ModSymSpace &target);

    // Process-wide shared cache of spaces keyed by (level, weight).
    static std::shared_ptr<ModSymSpace> get(long level, long weight);

private:
    long level_;
    long weight_;
    ManinBasis manin_;

    std::unique_ptr<RationalMatrix> star_;
    std::unique_ptr<RationalMatrix> boundary_;
    std::unique_ptr<Subspace> cuspidal_plus_;
    std::unique_ptr<Subspace> new_plus_;
    std::map<long, RationalMatrix> hecke_cache_;
    std::map<long, RationalMatrix> al_cache_;

    std::vector<std::pair<long, long>> cusp_classes_;  // reduced representatives
    long cusp_class_index(long p, long q);

    RationalMatrix hecke_matrix_prime(long p);
};

}  // namespace newforms
