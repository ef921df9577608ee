#pragma once

namespace newforms {

// Index of the Hecke congruence subgroup of level N in the full modular group:
// N * prod_{p | N} (1 + 1/p).
long gamma0_index(long N);

// Number of elliptic points of order 2 resp. 3 on X_0(N).
long elliptic_points_order2(long N);
long elliptic_points_order3(long N);

// Number of cusps of X_0(N).
long cusp_count(long N);

long gamma0_genus(long N);

// dim S_k(Gamma_0(N)) for k >= 2 even; zero for odd or non-positive k.
long dim_cusp_forms(long N, long k);

// Dimension of the new subspace, by divisor-count inversion over the levels
// M | N.
long dim_new_cusp_forms(long N, long k);

// Hecke operators up to this bound determine a cusp form of the given level
// and weight: ceil(k * index / 12).
long sturm_bound(long N, long k);

} // namespace newforms
