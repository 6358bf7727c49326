#include <doctest.h>

#include <nlohmann/json.hpp>

#include "kcycles/counting.hpp"
#include "kcycles/expectation.hpp"
#include "kcycles/oracle.hpp"
#include "support.hpp"

using namespace kcycles;
using kcycles::test::error_of;

TEST_SUITE("oracle") {
  TEST_CASE("enumerate_sn") {
    std::size_t count = 0;
    std::size_t by_twos[3] = {0, 0, 0};
    std::vector<Letter> first;
    enumerate_sn(4, [&](const Permutation& p) {
      if (count == 0) first = p.one_line();
      ++count;
      ++by_twos[count_k_cycles(p, 2)];
    });
    CHECK(count == 24);
    CHECK(by_twos[0] == 15);
    CHECK(by_twos[1] == 6);
    CHECK(by_twos[2] == 3);
    CHECK(first == std::vector<Letter>{1, 2, 3, 4});

    count = 0;
    enumerate_sn(0, [&](const Permutation& p) {
      CHECK(p.empty());
      ++count;
    });
    CHECK(count == 1);
    count = 0;
    enumerate_sn(5, [&](const Permutation&) { ++count; });
    CHECK(count == 120);
    CHECK(error_of([] { enumerate_sn(10, [](const Permutation&) {}); }) == ErrorCode::resource);
  }

  TEST_CASE("brute counts") {
    CHECK(brute_count_kcycles(4, 0, 2) == 15);
    CHECK(brute_count_kcycles(4, 2, 2) == 3);
    CHECK(brute_count_kcycles(6, 1, 3) == count_kcycle_perms(6, 1, 3));
    CHECK(brute_first_letter_count(4, 1, 2, 1) == 3);
    CHECK(brute_first_letter_count(4, 2, 2, 1) == 0);
    for (std::uint32_t a = 3; a <= 5; ++a) {
      CHECK(brute_first_letter_count(5, 0, 2, a) == brute_first_letter_count(5, 0, 2, 2));
    }
    for (std::uint32_t n = 1; n <= 7; ++n) {
      for (std::uint32_t k = 1; k <= n; ++k) {
        BigInt total = 0;
        for (std::uint32_t m = 0; m * k <= n; ++m) total += brute_count_kcycles(n, m, k);
        CHECK(total == factorial(n));
      }
    }
  }

  TEST_CASE("brute expectations") {
    CHECK(brute_expected_letter(4, 0, 2, 1) == make_rational(13, 5));
    CHECK(brute_expected_letter(4, 1, 2, 1) == 2);
    CHECK(brute_expected_letter(4, 2, 2, 1) == 3);
    CHECK(error_of([] { brute_expected_letter(4, 3, 2, 1); }) == ErrorCode::empty_population);
    CHECK(brute_mahonian_expectation(3, Statistic::maj, 1) == make_rational(5, 2));
    for (std::uint32_t n = 1; n <= 6; ++n) CHECK(brute_mahonian_expectation(n, Statistic::inv, 0) == 1);
    CHECK(error_of([] { brute_mahonian_expectation(3, Statistic::inv, 4); }) == ErrorCode::empty_population);
  }

  TEST_CASE("verify_all passes at a small budget") {
    VerificationBudget budget;
    budget.max_n = 4;
    budget.max_bijection_n = 4;
    budget.max_kn_letter = 4;
    const auto report = verify_all(budget);
    CHECK(report.all_passed());
    CHECK(report.checks.size() >= 20);
    for (const auto& c : report.checks) {
      INFO(c.name << ": " << c.counterexample);
      CHECK(c.passed);
    }
    const auto json = nlohmann::json::parse(report.to_json());
    CHECK(json.at("all_passed").get<bool>());
    CHECK(json.at("checks").size() == report.checks.size());
    CHECK(report.to_text().find("FAIL") == std::string::npos);
  }

  TEST_CASE("verify_all passes at the default budget") {
    const auto report = verify_all();
    for (const auto& c : report.checks) {
      INFO(c.name << ": " << c.counterexample);
      CHECK(c.passed);
    }
  }

  TEST_CASE("mutated closed forms produce counterexamples") {
    VerificationBudget budget;
    budget.max_n = 6;
    auto forms = ClosedForms::library();
    // Off by one in the upper summation bound.
    forms.count = [](std::int64_t n, std::int64_t m, std::int64_t k) -> BigInt {
      if (m < 0 || n < m * k) return 0;
      BigRational sum = 0;
      for (std::int64_t i = 0; i <= n / k - m - 1; ++i) {
        BigRational term = make_rational(1, factorial(static_cast<std::uint64_t>(i)) * power(k, static_cast<std::uint64_t>(i)));
        sum += (i % 2 == 0) ? term : BigRational(-term);
      }
      const BigRational value = sum * make_rational(factorial(static_cast<std::uint64_t>(n)),
                                                    factorial(static_cast<std::uint64_t>(m)) *
                                                        power(k, static_cast<std::uint64_t>(m)));
      return value.get_num() / value.get_den();
    };
    const auto broken = check_counts_against_oracle(forms, budget);
    CHECK_FALSE(broken.passed);
    CHECK(broken.counterexample.find("n=") != std::string::npos);

    auto shifted = ClosedForms::library();
    shifted.expected_first = [](std::int64_t n, std::int64_t m, std::int64_t k) -> BigRational {
      return expected_first_letter(n, m, k) + (n == 4 ? 1 : 0);
    };
    const auto wrong = check_expectations_against_oracle(shifted, budget);
    CHECK_FALSE(wrong.passed);
    CHECK(wrong.counterexample.find("n=4") != std::string::npos);

    CHECK(check_counts_against_oracle(ClosedForms::library(), budget).passed);
    CHECK(check_expectations_against_oracle(ClosedForms::library(), budget).passed);
  }
}
