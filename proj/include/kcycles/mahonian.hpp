#pragma once

// Checkers for two open conjectures on the expected first letter of a
// permutation conditioned on a Mahonian statistic. Nothing outside this
// module may use the conjectured values as a shortcut; they are compared
// against enumeration and nothing more.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kcycles/bignum.hpp"

namespace kcycles {

/// M(n+1,j) / M(n,j), or nullopt when M(n,j) = 0.
std::optional<BigRational> inv_conjecture_rhs(std::int64_t n, std::int64_t j);

/// The conjectured rational function of n for maj = j, j in 1..4. Throws
/// unsupported for other j; nullopt when the denominator vanishes at n.
std::optional<BigRational> maj_conjecture_rhs(std::int64_t j, std::int64_t n);

enum class ConjectureId { inv, maj1, maj2, maj3, maj4 };

const char* to_string(ConjectureId id) noexcept;

struct ConjectureCell {
  ConjectureId id;
  std::int64_t n;
  std::int64_t value;   // the statistic value j
  BigRational conjectured;
  BigRational brute;
  bool equal;
  bool in_stated_range;  // n > j for inv, n >= j for maj
};

struct ConjectureReport {
  std::vector<ConjectureCell> cells;

  std::size_t matches(bool stated_range_only) const;
  std::size_t mismatches(bool stated_range_only) const;
  /// First mismatch inside the stated range, if any.
  std::optional<ConjectureCell> first_counterexample() const;
};

enum class ConjectureFamily { inv, maj, both };

/// Cells for 1 <= n <= n_max. inv covers 0 <= j <= inv_max_value, maj
/// covers j in 1..4. Only cells with a nonempty population and a defined
/// conjectured value are kept.
ConjectureReport check_conjectures(std::uint32_t n_max, ConjectureFamily family = ConjectureFamily::both,
                                   std::int64_t inv_max_value = 10);

}  // namespace kcycles
