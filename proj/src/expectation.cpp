#include "kcycles/expectation.hpp"

#include <string>

#include "kcycles/counting.hpp"
#include "kcycles/error.hpp"

namespace kcycles {

namespace {

void require_k_at_least_two(std::int64_t k) {
  if (k < 2) {
    fail(k >= 1 ? ErrorCode::unsupported : ErrorCode::domain,
         "expectations are only defined here for k >= 2");
  }
}

std::string cell_name(std::int64_t n, std::int64_t m, std::int64_t k) {
  return "(n=" + std::to_string(n) + ", m=" + std::to_string(m) + ", k=" + std::to_string(k) + ")";
}

// (-1)^(n-m) / (2 D(k, n-m))
BigRational derangement_correction(std::int64_t n, std::int64_t m, std::int64_t k) {
  BigRational c = make_rational(1, 2 * derangements_gsg(k, n - m));
  return (n - m) % 2 == 0 ? c : BigRational(-c);
}

}  // namespace

BigRational expected_first_letter(std::int64_t n, std::int64_t m, std::int64_t k) {
  require_k_at_least_two(k);
  if (n < 1) fail(ErrorCode::domain, "need n >= 1");
  const BigInt population = count_kcycle_perms(n, m, k);
  if (population == 0) {
    fail(ErrorCode::empty_population, "no permutation has " + cell_name(n, m, k));
  }
  const BigRational ratio = make_rational(count_kcycle_perms(n - 1, m, k), population);
  return make_rational(n, 2) * (BigRational(1) - ratio) + 1;
}

BigRational expected_first_letter_derangement_form(std::int64_t n, std::int64_t m, std::int64_t k) {
  require_k_at_least_two(k);
  if (n < 0 || m < 0) fail(ErrorCode::domain, "need n, m >= 0");
  if (m > n) fail(ErrorCode::empty_population, "no permutation has " + cell_name(k * n, m, k));
  if (n == 0) fail(ErrorCode::domain, "S_0 has no first letter");
  return make_rational(k * n + 1, 2) + derangement_correction(n, m, k);
}

BigRational expected_letter_at(std::int64_t n, std::int64_t m, std::int64_t k, std::int64_t i) {
  require_k_at_least_two(k);
  if (n < 1 || m < 0) fail(ErrorCode::domain, "need n >= 1 and m >= 0");
  if (m > n) fail(ErrorCode::empty_population, "no permutation has " + cell_name(k * n, m, k));
  const std::int64_t size = k * n;
  if (i < 1 || i > size) {
    fail(ErrorCode::domain, "position " + std::to_string(i) + " outside 1.." + std::to_string(size));
  }
  return make_rational(size + 1, 2) +
         derangement_correction(n, m, k) * make_rational(size + 1 - 2 * i, size - 1);
}

std::optional<BigRational> ExpectationTable::at(std::int64_t n, std::int64_t m) const {
  for (const auto& row : rows) {
    if (row.n != n) continue;
    for (const auto& cell : row.cells) {
      if (cell.m == m) return cell.value;
    }
  }
  return std::nullopt;
}

std::size_t ExpectationTable::cell_count() const {
  std::size_t total = 0;
  for (const auto& row : rows) total += row.cells.size();
  return total;
}

ExpectationTable expectation_table(std::int64_t k, std::int64_t n_max) {
  require_k_at_least_two(k);
  if (n_max < 1) fail(ErrorCode::domain, "need n_max >= 1");
  ExpectationTable table;
  table.k = k;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    ExpectationRow row{n, {}};
    for (std::int64_t m = 0; m <= n / k; ++m) {
      if (count_kcycle_perms(n, m, k) == 0) continue;
      BigRational value = expected_first_letter(n, m, k);
      if (n % k == 0 && expected_first_letter_derangement_form(n / k, m, k) != value) {
        fail(ErrorCode::internal, "expectation forms disagree at " + cell_name(n, m, k));
      }
      row.cells.push_back({m, std::move(value)});
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace kcycles
