#pragma once

#include "algebra/matrix.hpp"
#include "modsym/p1.hpp"

#include <vector>

namespace newforms {

// Substitution matrix on homogeneous monomials of degree k-2:
// W[l][s] = coefficient of X^l Y^(k-2-l) in (aX+bY)^s (cX+dY)^(k-2-s).
std::vector<std::vector<Integer>> monomial_action(long a, long b, long c, long d, long k);

// Quotient presentation of weight-k level-N symbols. Generators are pairs
// (monomial degree i <= k-2, projective point j), indexed i * p1.size() + j.
// The two-term and three-term relations are eliminated once here; everything
// downstream works in the surviving basis.
class ManinBasis {
  public:
    ManinBasis(long N, long k);

    long level() const { return N_; }
    long weight() const { return k_; }
    const P1List &p1() const { return p1_; }
    long n_gens() const { return n_gens_; }
    long basis_size() const { return gen_to_basis_.rows(); }

    long gen_index(long i, long j) const { return i * p1_.size() + j; }
    long gen_monomial(long g) const { return g / p1_.size(); }
    long gen_point(long g) const { return g % p1_.size(); }

    // Generator index each basis element stands for.
    const std::vector<long> &basis_gens() const { return basis_gens_; }

    // Column g expresses generator g in the basis.
    const RationalMatrix &gen_to_basis() const { return gen_to_basis_; }

  private:
    long N_, k_;
    P1List p1_;
    long n_gens_;
    RationalMatrix gen_to_basis_;
    std::vector<long> basis_gens_;
};

} // namespace newforms
