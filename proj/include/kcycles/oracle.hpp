#pragma once

// Brute-force enumeration oracles and the verification harness that checks
// every closed form, identity and bijection property against them.
//
// Oracles only enumerate and filter. They never call the closed forms they
// are used to check.

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "kcycles/bignum.hpp"
#include "kcycles/permutation.hpp"

namespace kcycles {

inline constexpr std::uint32_t default_sn_budget = 9;

/// Visits all n! permutations of {1..n} in lexicographic one-line order.
/// Throws a resource error when n exceeds `max_n`.
void enumerate_sn(std::uint32_t n, const std::function<void(const Permutation&)>& visit,
                  std::uint32_t max_n = default_sn_budget);

BigInt brute_count_kcycles(std::uint32_t n, std::uint32_t m, std::uint32_t k,
                           std::uint32_t max_n = default_sn_budget);

/// Average of pi(i) over the permutations of S_n with exactly m k-cycles.
BigRational brute_expected_letter(std::uint32_t n, std::uint32_t m, std::uint32_t k,
                                  std::uint32_t i, std::uint32_t max_n = default_sn_budget);

BigInt brute_first_letter_count(std::uint32_t n, std::uint32_t m, std::uint32_t k,
                                std::uint32_t a, std::uint32_t max_n = default_sn_budget);

/// Histogram over S(k,n): number of fixed points -> number of elements.
std::map<std::uint32_t, BigInt> brute_gsg_counts(std::uint32_t k, std::uint32_t n,
                                                 std::uint64_t budget = 1'000'000);

/// Average of pi(1) over permutations of S_n whose statistic equals value.
BigRational brute_mahonian_expectation(std::uint32_t n, Statistic which, std::uint64_t value,
                                       std::uint32_t max_n = default_sn_budget);

struct VerificationBudget {
  std::uint32_t max_n = 8;             // symmetric group enumeration
  std::uint64_t max_gsg = 1'000'000;   // k^n n! for S(k,n) enumeration
  std::uint32_t max_bijection_n = 7;   // insert/extract exhaustive checks
  std::uint32_t max_kn_letter = 8;     // i-th letter oracle
  std::uint32_t max_kn_sum = 12;       // i-th letter sum rule
  std::uint32_t closed_form_n = 30;    // closed-form-only identities
  std::uint32_t max_k = 4;             // largest k in the counting grids
  std::size_t series_order = 12;
};

struct CheckResult {
  std::string name;
  std::string range;
  bool passed = true;
  std::string counterexample;  // exact inputs and both sides of the failure
  std::chrono::duration<double, std::milli> elapsed{};
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  std::string to_text() const;
  std::string to_json() const;
};

/// Closed forms under test; verify_all uses the library's own functions,
/// tests substitute deliberately broken ones.
struct ClosedForms {
  std::function<BigInt(std::int64_t, std::int64_t, std::int64_t)> count;
  std::function<BigRational(std::int64_t, std::int64_t, std::int64_t)> expected_first;
  static ClosedForms library();
};

CheckResult check_counts_against_oracle(const ClosedForms& forms, const VerificationBudget& budget);
CheckResult check_expectations_against_oracle(const ClosedForms& forms,
                                              const VerificationBudget& budget);

VerificationReport verify_all(const VerificationBudget& budget = {});

}  // namespace kcycles
