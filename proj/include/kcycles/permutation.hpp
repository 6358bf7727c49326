#pragma once

// Permutations on finite sets of positive-integer letters, stored as an
// ordered list of disjoint cycles.
//
// Canonical form: every cycle starts with its largest letter and the cycles
// are listed with first letters strictly increasing left to right, so the
// rightmost cycle holds the global maximum. The bijection code relies on
// this storage order: cycles().back() is the rightmost cycle.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kcycles {

using Letter = std::uint32_t;
using Cycle = std::vector<Letter>;

enum class Alphabet {
  decimal,  // letters of any size, multi-digit letters separated by spaces
  base36,   // 1..9 then A..Z for 10..35
};

enum class DisplayOrder {
  paper,     // smallest first letter on the left, maximum cycle rightmost
  reversed,  // maximum cycle leftmost
};

enum class Statistic { inv, maj, des, fixed_points };

class Permutation {
 public:
  Permutation() = default;

  /// Validates that cycles are nonempty and that no letter repeats. Letters
  /// must be positive. The given cycle order and rotations are kept as is.
  explicit Permutation(std::vector<Cycle> cycles);

  /// Position i (1-based) maps to values[i-1]. Throws malformed input unless
  /// values is a rearrangement of 1..n.
  static Permutation from_one_line(std::span<const Letter> values);
  static Permutation identity(Letter n);

  const std::vector<Cycle>& cycles() const noexcept { return cycles_; }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  /// Sorted support.
  std::vector<Letter> support() const;
  bool has_letter(Letter x) const;
  bool contiguous_support() const;
  Letter max_letter() const;

  bool is_canonical() const;
  Permutation canonical() const;

  /// Image of i. Throws domain error when i is not in the support.
  Letter letter_at(Letter i) const;

  /// One-line form; requires support {1..n}.
  std::vector<Letter> one_line() const;

  std::size_t count_cycles_of_length(std::size_t k) const;

  /// Structural equality: same cycles in the same order and rotation.
  /// Compare canonical() forms to test equality as bijections.
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Cycle> cycles_;
  std::size_t size_ = 0;
};

Permutation canonicalize(const Permutation& p);
std::size_t count_k_cycles(const Permutation& p, std::size_t k);
Letter letter_at(const Permutation& p, Letter i);
std::uint64_t statistic(const Permutation& p, Statistic which);
std::uint64_t statistic(std::span<const Letter> one_line, Statistic which);

/// Same permutation with every letter replaced by f(letter).
template <class F>
Permutation relabel(const Permutation& p, F&& f) {
  std::vector<Cycle> cycles = p.cycles();
  for (auto& c : cycles) {
    for (auto& x : c) x = f(x);
  }
  return Permutation(std::move(cycles));
}

std::string render_letter(Letter x, Alphabet alphabet);
Letter parse_letter(std::string_view text, Alphabet alphabet);

/// Parses "(21)(43)". Without any whitespace or comma in the text, every
/// character inside a cycle is one letter, so "(21)" is the 2-cycle 2->1.
/// Otherwise letters are separator-delimited tokens: "(12 3) (4)". In
/// base-36 mode the tokens themselves are base-36 numerals.
Permutation parse_cycles(std::string_view text, Alphabet alphabet);

/// Canonicalizes then renders. Throws a render error for letters above 35
/// in base-36 mode. Decimal mode switches to the separated form, "(12 3) (4)",
/// as soon as some letter has more than one digit.
std::string format_cycles(const Permutation& p, Alphabet alphabet,
                          DisplayOrder order = DisplayOrder::paper);

/// Comma/whitespace separated integers, or a contiguous word of base-36
/// digits such as "2143".
Permutation parse_one_line(std::string_view text);

const char* to_string(Statistic s) noexcept;
Statistic parse_statistic(std::string_view name);

}  // namespace kcycles
