#pragma once

// A recursive bijection S_{n-1} x [n] -> S_n that keeps the number of
// k-cycles whenever k does not divide n, together with its inverse.
//
// Both core maps work on canonical cycle lists over arbitrary letter sets.
// Writing the cycles as c^(t) ... c^(2) c^(1) with c^(1) the rightmost and
// l = |c^(1)|, insertion of x checks, in order:
//
//   phi_a  x exceeds the first letter of c^(1) (or no cycles): append (x)
//   phi_b  l == k: insert c^(1)_2 into the rest, then append c^(1) with
//          c^(1)_2 removed and x added at the end
//   phi_c  l == k-1 and t > 1: extract (rest', x') from the rest, then
//          append (c^(1)_1 x' c^(1)_2 ... c^(1)_{k-1} x)
//   phi_d  otherwise: append x to c^(1)
//
// Extraction mirrors it:
//
//   psi_a  l == 1: drop c^(1) and return its letter
//   psi_b  l == k+1: insert c^(1)_2 into the rest, keep
//          (c^(1)_1 c^(1)_3 ... c^(1)_k) and return c^(1)_{k+1}
//   psi_c  l == k and t > 1: extract (rest', x') from the rest, keep
//          (c^(1)_1 x' c^(1)_2 ... c^(1)_{k-1}) and return c^(1)_k
//   psi_d  otherwise: remove and return the last letter of c^(1)

#include <cstdint>
#include <string>
#include <vector>

#include "kcycles/permutation.hpp"

namespace kcycles {

enum class Rule { phi_a, phi_b, phi_c, phi_d, psi_a, psi_b, psi_c, psi_d };

const char* to_string(Rule rule) noexcept;
bool is_phi(Rule rule) noexcept;

struct TraceStep {
  Rule rule;
  std::size_t depth = 0;            // recursion depth, 0 for the top call
  std::size_t input_letters = 0;    // letters in the permutation handed to this call
  Cycle consumed;                   // c^(1) before the step; empty if there was none
  Letter letter = 0;                // phi: the letter inserted; psi: the letter returned
  Letter passed = 0;                // letter handed to the nested call, 0 if none
  std::vector<Cycle> produced;      // cycles this step appends after the nested result
  Permutation result;               // permutation returned by this call
};

/// Steps in call order: the top-level application first, nested calls after.
struct InsertionTrace {
  std::vector<TraceStep> steps;
};

/// Rebuilds the output of the traced call from its input: the deepest step
/// leaves a prefix of untouched cycles and every step, deepest first,
/// appends its produced cycles.
Permutation replay(const Permutation& input, const InsertionTrace& trace);

/// Core insertion on a canonical permutation over any letter set L, x not in
/// L. Throws domain error for non-canonical input, k < 2, or x in L.
Permutation phi_core(const Permutation& p, Letter x, std::uint32_t k,
                     InsertionTrace* trace = nullptr);

struct Extraction {
  Permutation rest;
  Letter letter = 0;
};

/// Core extraction on a nonempty canonical permutation.
Extraction psi_core(const Permutation& p, std::uint32_t k, InsertionTrace* trace = nullptr);

struct InsertResult {
  Permutation perm;
  /// True when k does not divide the new size n, the only case in which the
  /// k-cycle count is guaranteed to be kept.
  bool preservation_guaranteed = false;
};

/// p lives on {1..n-1}, 1 <= x <= n. Letters >= x are shifted up by one
/// before the core insertion, so the result lives on {1..n}.
InsertResult insert(const Permutation& p, Letter x, std::uint32_t k,
                    InsertionTrace* trace = nullptr);

struct ExtractResult {
  Permutation perm;
  Letter letter = 0;
  bool preservation_guaranteed = false;
};

/// Inverse of insert: p lives on {1..n}, n >= 1. After the core extraction
/// the letters above the extracted one are shifted down by one.
ExtractResult extract(const Permutation& p, std::uint32_t k, InsertionTrace* trace = nullptr);

struct TracedInsert {
  InsertResult result;
  InsertionTrace trace;
};

TracedInsert trace_insert(const Permutation& p, Letter x, std::uint32_t k);

std::string render_trace(const InsertionTrace& trace, Alphabet alphabet);

}  // namespace kcycles
