#include "kcycles/counting.hpp"

#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include "kcycles/error.hpp"

namespace kcycles {

namespace {

void require_k(std::int64_t k, std::int64_t minimum) {
  if (k < minimum) {
    fail(k >= 1 ? ErrorCode::unsupported : ErrorCode::domain,
         "k = " + std::to_string(k) + " is not supported here (need k >= " +
             std::to_string(minimum) + ")");
  }
}

void require_nonnegative(std::int64_t v, const char* name) {
  if (v < 0) fail(ErrorCode::domain, std::string(name) + " must be nonnegative");
}

std::uint64_t u(std::int64_t v) { return static_cast<std::uint64_t>(v); }

// Memo tables keyed by (k, n, m). Values are computed outside the lock; two
// threads racing on the same key store identical values.
class Memo {
 public:
  template <class F>
  BigInt get(std::int64_t k, std::int64_t n, std::int64_t m, F&& compute) {
    const auto key = std::make_tuple(k, n, m);
    {
      std::lock_guard lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    BigInt value = compute();
    std::lock_guard lock(mutex_);
    table_.emplace(key, value);
    return value;
  }

 private:
  std::mutex mutex_;
  std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, BigInt> table_;
};

Memo& closed_form_memo() {
  static Memo memo;
  return memo;
}

Memo& recursive_memo() {
  static Memo memo;
  return memo;
}

Memo& derangement_memo() {
  static Memo memo;
  return memo;
}

// Alternating sum sum_{i=0}^{top} (-1)^i / (i! k^i).
BigRational alternating_tail(std::int64_t top, std::int64_t k) {
  BigRational sum = 0;
  BigRational term = 1;
  for (std::int64_t i = 0; i <= top; ++i) {
    if (i > 0) term /= BigInt(-1) * i * k;
    sum += term;
  }
  return sum;
}

BigInt recursive_count(std::int64_t n, std::int64_t m, std::int64_t k);

// C_k(r,0) without the closed form: everything in S_r minus the permutations
// with at least one k-cycle, each of those counted through the recurrence.
BigInt recursive_zero_count(std::int64_t r, std::int64_t k) {
  BigInt total = factorial(u(r));
  for (std::int64_t j = 1; j * k <= r; ++j) total -= recursive_count(r, j, k);
  return total;
}

BigInt recursive_count(std::int64_t n, std::int64_t m, std::int64_t k) {
  if (m < 0 || n < m * k) return 0;
  if (m == 0) return recursive_zero_count(n, k);
  return recursive_memo().get(k, n, m, [&] {
    const BigRational value =
        make_rational(factorial(u(k - 1)) * binomial(u(n), u(k)) * recursive_count(n - k, m - 1, k),
                      m);
    return require_integral(value, "k-cycle recurrence");
  });
}

}  // namespace

BigInt count_kcycle_perms(std::int64_t n, std::int64_t m, std::int64_t k) {
  require_k(k, 1);
  if (n < 0 || m < 0 || n < m * k) return 0;
  return closed_form_memo().get(k, n, m, [&] {
    const BigRational value = make_rational(factorial(u(n)), factorial(u(m)) * power(k, u(m))) *
                              alternating_tail(n / k - m, k);
    return require_integral(value, "k-cycle closed form");
  });
}

BigInt count_kcycle_perms_recursive(std::int64_t n, std::int64_t m, std::int64_t k) {
  require_k(k, 1);
  if (m < 1) fail(ErrorCode::domain, "the recurrence needs m >= 1");
  if (n < 0) return 0;
  return recursive_count(n, m, k);
}

BigInt count_difference(std::int64_t n, std::int64_t m, std::int64_t k) {
  require_k(k, 1);
  if (n < 1) fail(ErrorCode::domain, "count_difference needs n >= 1");
  if (n % k != 0 || m < 0) return 0;
  const std::int64_t q = n / k;
  if (m > q) return 0;
  BigInt numerator = factorial(u(n)) * binomial(u(q), u(m));
  if ((q - m) % 2 != 0) numerator = -numerator;
  return require_integral(make_rational(numerator, factorial(u(q)) * power(k, u(q))),
                          "difference formula");
}

BigInt count_with_first_letter(std::int64_t n, std::int64_t m, std::int64_t k, std::int64_t a) {
  require_k(k, 2);
  if (n < 2) fail(ErrorCode::domain, "first-letter counts need n >= 2");
  if (a < 1 || a > n) {
    fail(ErrorCode::domain, "first letter " + std::to_string(a) + " outside 1.." + std::to_string(n));
  }
  if (a == 1) return count_kcycle_perms(n - 1, m, k);
  const BigRational value =
      make_rational(count_kcycle_perms(n, m, k) - count_kcycle_perms(n - 1, m, k), n - 1);
  return require_integral(value, "first-letter count");
}

BigInt derangements_gsg(std::int64_t k, std::int64_t n) {
  require_k(k, 1);
  require_nonnegative(n, "n");
  return derangement_memo().get(k, n, 0, [&] {
    const BigRational value = BigRational(power(k, u(n)) * factorial(u(n))) * alternating_tail(n, k);
    return require_integral(value, "derangement formula");
  });
}

BigInt gsg_fixed_point_count(std::int64_t k, std::int64_t n, std::int64_t m) {
  require_k(k, 1);
  require_nonnegative(n, "n");
  if (m < 0 || m > n) return 0;
  return binomial(u(n), u(m)) * derangements_gsg(k, n - m);
}

std::vector<BigInt> mahonian_row(std::int64_t n) {
  require_nonnegative(n, "n");
  std::vector<BigInt> row{1};
  // Multiply by 1 + q + ... + q^i for i = 0..n-1.
  for (std::int64_t i = 1; i < n; ++i) {
    std::vector<BigInt> next(row.size() + u(i), 0);
    for (std::size_t a = 0; a < row.size(); ++a) {
      for (std::int64_t d = 0; d <= i; ++d) next[a + u(d)] += row[a];
    }
    row = std::move(next);
  }
  return row;
}

BigInt mahonian_count(std::int64_t n, std::int64_t j) {
  require_nonnegative(n, "n");
  if (j < 0) return 0;
  const auto row = mahonian_row(n);
  return u(j) < row.size() ? row[u(j)] : BigInt(0);
}

PowerSeries egf_target_series(std::int64_t k, std::size_t order) {
  require_k(k, 2);
  PowerSeries out(order);
  for (std::size_t j = 0; j <= order; ++j) {
    BigRational c = 0;
    for (std::size_t i = 0; i <= j; ++i) {
      BigRational term = make_rational(power(k, j - i), factorial(i));
      c += (i % 2 == 0) ? term : BigRational(-term);
    }
    out[j] = c;
  }
  return out;
}

PowerSeries egf_lhs_cycles(std::int64_t k, std::size_t order) {
  require_k(k, 2);
  PowerSeries out(order);
  for (std::size_t n = 0; n <= order; ++n) {
    const auto kn = static_cast<std::int64_t>(n) * k;
    out[n] = make_rational(count_kcycle_perms(kn, 0, k) * power(k, n), factorial(u(kn)));
  }
  return out;
}

PowerSeries egf_lhs_derangements(std::int64_t k, std::size_t order) {
  require_k(k, 2);
  PowerSeries out(order);
  for (std::size_t n = 0; n <= order; ++n) {
    out[n] = make_rational(derangements_gsg(k, static_cast<std::int64_t>(n)), factorial(n));
  }
  return out;
}

bool c_identity_check(std::int64_t k, std::int64_t n, std::int64_t m) {
  require_k(k, 1);
  require_nonnegative(n, "n");
  require_nonnegative(m, "m");
  const BigInt lhs = count_kcycle_perms(k * (n + m), m, k);
  const BigRational rhs = BigRational(binomial(u(k * n + k * m), u(k * n)) *
                                      count_kcycle_perms(k * n, 0, k)) *
                          make_rational(factorial(u(k * m)), power(k, u(m)) * factorial(u(m)));
  return BigRational(lhs) == rhs;
}

bool fixed_points_cycles_identity_check(std::int64_t k, std::int64_t n, std::int64_t m) {
  require_k(k, 2);
  require_nonnegative(n, "n");
  if (m < 0 || m > n) fail(ErrorCode::domain, "need 0 <= m <= n");
  const BigRational lhs = make_rational(count_kcycle_perms(k * n, m, k), factorial(u(k * n)));
  const BigRational rhs = make_rational(binomial(u(n), u(m)) * derangements_gsg(k, n - m),
                                        power(k, u(n)) * factorial(u(n)));
  return lhs == rhs;
}

}  // namespace kcycles
