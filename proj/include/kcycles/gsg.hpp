#pragma once

// The generalized symmetric group S(k,n): pairs (shifts, perm) where shifts
// is a vector of residues mod k and perm a permutation of {1..n}. Acting on
// a sequence s adds the shifts position by position and then moves the
// value at position i to position perm(i).

#include <cstdint>
#include <functional>
#include <vector>

#include "kcycles/permutation.hpp"

namespace kcycles {

using Residue = std::uint32_t;

class GsgElement {
 public:
  /// Throws domain error when the shift count differs from the permutation
  /// size, a shift is >= k, or perm does not live on {1..n}.
  GsgElement(std::uint32_t k, std::vector<Residue> shifts, Permutation perm);

  std::uint32_t modulus() const noexcept { return k_; }
  std::size_t degree() const noexcept { return shifts_.size(); }
  const std::vector<Residue>& shifts() const noexcept { return shifts_; }
  const Permutation& perm() const noexcept { return perm_; }

  static GsgElement identity(std::uint32_t k, std::uint32_t n);

 private:
  std::uint32_t k_;
  std::vector<Residue> shifts_;
  Permutation perm_;
  std::vector<Letter> images_;  // one-line form of perm_

  friend std::vector<Residue> act(const GsgElement&, const std::vector<Residue>&);
  friend std::vector<std::size_t> fixed_points(const GsgElement&);
};

/// result[perm(i)] = (s[i] + shifts[i]) mod k. Throws domain error on a
/// length mismatch or an entry >= k.
std::vector<Residue> act(const GsgElement& g, const std::vector<Residue>& s);

/// 1-based indices i with perm(i) = i and shifts[i] = 0.
std::vector<std::size_t> fixed_points(const GsgElement& g);
bool is_derangement(const GsgElement& g);

inline constexpr std::uint64_t default_gsg_budget = 10'000'000;

/// Visits all k^n n! elements exactly once, ordered by shift vector
/// (lexicographic) and then by one-line permutation (lexicographic).
/// Throws a resource error when k^n n! exceeds `budget`.
void enumerate_gsg(std::uint32_t k, std::uint32_t n,
                   const std::function<void(const GsgElement&)>& visit,
                   std::uint64_t budget = default_gsg_budget);

/// k^n n!, saturating at UINT64_MAX.
std::uint64_t gsg_order(std::uint32_t k, std::uint32_t n);

}  // namespace kcycles
