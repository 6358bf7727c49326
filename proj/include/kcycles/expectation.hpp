#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kcycles/bignum.hpp"

namespace kcycles {

/// E[pi(1)] over permutations of S_n with exactly m k-cycles, computed as
/// (n/2)(1 - C_k(n-1,m)/C_k(n,m)) + 1. Requires k >= 2 and n >= 1; throws
/// empty_population when no such permutation exists.
BigRational expected_first_letter(std::int64_t n, std::int64_t m, std::int64_t k);

/// The same expectation for S_{kn}, from derangements of S(k,n):
/// (kn+1)/2 + (-1)^(n-m) / (2 D(k, n-m)). `n` is the group index here, so
/// the permutations have kn letters.
BigRational expected_first_letter_derangement_form(std::int64_t n, std::int64_t m,
                                                   std::int64_t k);

/// E[pi(i)] over S_{kn} with exactly m k-cycles, for 1 <= i <= kn:
/// (kn+1)/2 + (-1)^(n-m) / (2 D(k,n-m)) * (kn+1-2i)/(kn-1).
BigRational expected_letter_at(std::int64_t n, std::int64_t m, std::int64_t k, std::int64_t i);

struct ExpectationCell {
  std::int64_t m;
  BigRational value;
};

struct ExpectationRow {
  std::int64_t n;
  std::vector<ExpectationCell> cells;
};

/// Expected first letters for 1 <= n <= n_max and every m with C_k(n,m) > 0.
struct ExpectationTable {
  std::int64_t k = 2;
  std::vector<ExpectationRow> rows;

  std::optional<BigRational> at(std::int64_t n, std::int64_t m) const;
  std::size_t cell_count() const;
};

/// Fills every populated cell from the C_k-ratio form. Rows with k | n are
/// recomputed from the derangement form and must agree; a disagreement
/// throws an internal error.
ExpectationTable expectation_table(std::int64_t k, std::int64_t n_max);

}  // namespace kcycles
