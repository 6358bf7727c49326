#include "kcycles/mahonian.hpp"

#include <array>
#include <map>

#include "kcycles/counting.hpp"
#include "kcycles/error.hpp"
#include "kcycles/oracle.hpp"
#include "kcycles/permutation.hpp"

namespace kcycles {

namespace {

BigInt evaluate(std::initializer_list<std::int64_t> coefficients_high_to_low, std::int64_t n) {
  BigInt acc = 0;
  for (std::int64_t c : coefficients_high_to_low) acc = acc * n + c;
  return acc;
}

// Sum of pi(1) and population size per statistic value, from one pass over S_n.
struct Tally {
  BigInt population = 0;
  BigInt first_letter_sum = 0;
};

std::map<std::uint64_t, Tally> tally(std::uint32_t n, Statistic which) {
  std::map<std::uint64_t, Tally> out;
  enumerate_sn(n, [&](const Permutation& p) {
    const auto word = p.one_line();
    auto& t = out[statistic(std::span<const Letter>(word), which)];
    t.population += 1;
    t.first_letter_sum += word.front();
  });
  return out;
}

}  // namespace

std::optional<BigRational> inv_conjecture_rhs(std::int64_t n, std::int64_t j) {
  const BigInt den = mahonian_count(n, j);
  if (den == 0) return std::nullopt;
  return make_rational(mahonian_count(n + 1, j), den);
}

std::optional<BigRational> maj_conjecture_rhs(std::int64_t j, std::int64_t n) {
  BigInt num;
  BigInt den;
  switch (j) {
    case 1:
      num = evaluate({1, 1, -2}, n);
      den = evaluate({1, -1}, n);
      break;
    case 2:
      num = evaluate({1, 0, -1, -6}, n);
      den = evaluate({1, -1, -2}, n);
      break;
    case 3:
      num = evaluate({1, 6, -13, -18, 0}, n);
      den = evaluate({1, 0, -7, 0}, n);
      break;
    case 4:
      num = evaluate({1, 20, -45, -80, -16, 0}, n);
      den = evaluate({1, 2, -13, -14, 0}, n);
      break;
    default:
      fail(ErrorCode::unsupported, "closed forms are only known for maj values 1..4");
  }
  if (den == 0) return std::nullopt;
  return make_rational(num, den * (j + 1));
}

const char* to_string(ConjectureId id) noexcept {
  switch (id) {
    case ConjectureId::inv: return "inv";
    case ConjectureId::maj1: return "maj-1";
    case ConjectureId::maj2: return "maj-2";
    case ConjectureId::maj3: return "maj-3";
    case ConjectureId::maj4: return "maj-4";
  }
  return "?";
}

std::size_t ConjectureReport::matches(bool stated_range_only) const {
  std::size_t total = 0;
  for (const auto& c : cells) total += c.equal && (!stated_range_only || c.in_stated_range);
  return total;
}

std::size_t ConjectureReport::mismatches(bool stated_range_only) const {
  std::size_t total = 0;
  for (const auto& c : cells) total += !c.equal && (!stated_range_only || c.in_stated_range);
  return total;
}

std::optional<ConjectureCell> ConjectureReport::first_counterexample() const {
  for (const auto& c : cells) {
    if (!c.equal && c.in_stated_range) return c;
  }
  return std::nullopt;
}

ConjectureReport check_conjectures(std::uint32_t n_max, ConjectureFamily family,
                                   std::int64_t inv_max_value) {
  ConjectureReport report;
  const bool want_inv = family != ConjectureFamily::maj;
  const bool want_maj = family != ConjectureFamily::inv;
  constexpr std::array maj_ids{ConjectureId::maj1, ConjectureId::maj2, ConjectureId::maj3,
                               ConjectureId::maj4};

  if (want_inv) {
    for (std::uint32_t n = 1; n <= n_max; ++n) {
      const auto counts = tally(n, Statistic::inv);
      for (std::int64_t j = 0; j <= inv_max_value; ++j) {
        auto it = counts.find(static_cast<std::uint64_t>(j));
        if (it == counts.end()) continue;
        const auto rhs = inv_conjecture_rhs(n, j);
        if (!rhs) continue;
        BigRational brute = make_rational(it->second.first_letter_sum, it->second.population);
        const bool equal = *rhs == brute;
        report.cells.push_back({ConjectureId::inv, n, j, *rhs, std::move(brute), equal,
                                static_cast<std::int64_t>(n) > j});
      }
    }
  }
  if (want_maj) {
    std::vector<std::map<std::uint64_t, Tally>> by_n(n_max + 1);
    for (std::uint32_t n = 1; n <= n_max; ++n) by_n[n] = tally(n, Statistic::maj);
    for (std::int64_t j = 1; j <= 4; ++j) {
      for (std::uint32_t n = 1; n <= n_max; ++n) {
        const auto& counts = by_n[n];
        auto it = counts.find(static_cast<std::uint64_t>(j));
        if (it == counts.end()) continue;
        const auto rhs = maj_conjecture_rhs(j, n);
        if (!rhs) continue;
        BigRational brute = make_rational(it->second.first_letter_sum, it->second.population);
        const bool equal = *rhs == brute;
        report.cells.push_back({maj_ids[static_cast<std::size_t>(j - 1)], n, j, *rhs,
                                std::move(brute), equal, static_cast<std::int64_t>(n) >= j});
      }
    }
  }
  return report;
}

}  // namespace kcycles
