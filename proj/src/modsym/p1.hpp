#pragma once

#include <unordered_map>
#include <utility>
#include <vector>

namespace newforms {

// The projective line over Z/N: pairs (u:v) with gcd(u, v, N) = 1 up to unit
// scaling. The canonical representative of a class has first coordinate
// g = gcd(u, N) and the smallest second coordinate the remaining unit
// stabilizer allows.
class P1List {
  public:
    explicit P1List(long N);

    long level() const { return N_; }
    long size() const { return static_cast<long>(reps_.size()); }
    const std::pair<long, long> &rep(long idx) const { return reps_[static_cast<size_t>(idx)]; }

    // Canonical representative of (u:v); requires gcd(u, v, N) = 1.
    std::pair<long, long> normalize(long u, long v) const;

    // Index of (u:v) in the list, or -1 when gcd(u, v, N) > 1.
    long index_of(long u, long v) const;

  private:
    long N_;
    std::vector<std::pair<long, long>> reps_;
    std::unordered_map<long, long> index_; // key u * N + v
};

// An integer matrix [a b; c d] of determinant 1 whose bottom row reduces to
// (u:v) mod N; requires gcd(u, v, N) = 1.
struct SL2Lift {
    long a, b, c, d;
};
SL2Lift lift_to_sl2(long u, long v, long N);

} // namespace newforms
