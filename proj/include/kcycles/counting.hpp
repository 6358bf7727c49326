#pragma once

// Exact counts of permutations by k-cycle count, derangements of the
// generalized symmetric group S(k,n), Mahonian numbers, and the exponential
// generating function identities that tie them together.
//
// Notation in comments: C_k(n,m) is the number of permutations of S_n with
// exactly m cycles of length k; D(k,n) the number of fixed-point-free
// elements of S(k,n).

#include <cstdint>
#include <vector>

#include "kcycles/bignum.hpp"
#include "kcycles/power_series.hpp"

namespace kcycles {

/// C_k(n,m) by the inclusion/exclusion closed form. Zero when m < 0 or
/// n < mk. k = 1 is allowed and counts permutations by fixed points.
BigInt count_kcycle_perms(std::int64_t n, std::int64_t m, std::int64_t k);

/// C_k(n,m) through m C_k(n,m) = (k-1)! binom(n,k) C_k(n-k, m-1), unrolled
/// down to C_k(n - mk, 0). Requires k, m >= 1.
BigInt count_kcycle_perms_recursive(std::int64_t n, std::int64_t m, std::int64_t k);

/// C_k(n,m) - n C_k(n-1,m) from its closed form: zero when k does not
/// divide n, otherwise n! (-1)^(n/k - m) binom(n/k, m) / ((n/k)! k^(n/k)).
BigInt count_difference(std::int64_t n, std::int64_t m, std::int64_t k);

/// Number of permutations of S_n with m k-cycles and first letter a.
/// Requires k >= 2 and n >= 2.
BigInt count_with_first_letter(std::int64_t n, std::int64_t m, std::int64_t k,
                               std::int64_t a);

/// D(k,n) = k^n n! sum_{i<=n} (-1)^i / (k^i i!).
BigInt derangements_gsg(std::int64_t k, std::int64_t n);

/// Elements of S(k,n) with exactly m fixed points: binom(n,m) D(k, n-m).
BigInt gsg_fixed_point_count(std::int64_t k, std::int64_t n, std::int64_t m);

/// Coefficients of the q-factorial [n]_q!, index j = number of permutations
/// of S_n with j inversions.
std::vector<BigInt> mahonian_row(std::int64_t n);
BigInt mahonian_count(std::int64_t n, std::int64_t j);

/// exp(-x)/(1-kx) through x^order, as c_j = sum_i (-1)^i k^(j-i) / i!.
PowerSeries egf_target_series(std::int64_t k, std::size_t order);
/// sum_n C_k(kn,0) k^n x^n / (kn)!.
PowerSeries egf_lhs_cycles(std::int64_t k, std::size_t order);
/// sum_n D(k,n) x^n / n!.
PowerSeries egf_lhs_derangements(std::int64_t k, std::size_t order);

/// C_k(k(n+m), m) == binom(kn+km, kn) C_k(kn,0) (km)! / (k^m m!).
bool c_identity_check(std::int64_t k, std::int64_t n, std::int64_t m);

/// C_k(kn,m)/(kn)! == binom(n,m) D(k,n-m) / (k^n n!).
bool fixed_points_cycles_identity_check(std::int64_t k, std::int64_t n, std::int64_t m);

}  // namespace kcycles
