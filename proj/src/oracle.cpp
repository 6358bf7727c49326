#include "kcycles/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "kcycles/bijection.hpp"
#include "kcycles/counting.hpp"
#include "kcycles/error.hpp"
#include "kcycles/expectation.hpp"
#include "kcycles/gsg.hpp"
#include "kcycles/mahonian.hpp"
#include "kcycles/power_series.hpp"

namespace kcycles {

void enumerate_sn(std::uint32_t n, const std::function<void(const Permutation&)>& visit,
                  std::uint32_t max_n) {
  if (n > max_n) {
    fail(ErrorCode::resource, "S_" + std::to_string(n) + " exceeds the enumeration budget n <= " +
                                  std::to_string(max_n));
  }
  std::vector<Letter> word(n);
  std::iota(word.begin(), word.end(), Letter{1});
  do {
    visit(Permutation::from_one_line(word));
  } while (std::next_permutation(word.begin(), word.end()));
}

namespace {

// Everything the k-cycle oracles need from one pass over S_n, keyed by the
// number of k-cycles.
struct KcycleTally {
  BigInt population = 0;
  std::vector<BigInt> letter_sums;   // [i-1] = sum of pi(i)
  std::vector<BigInt> first_letter;  // [a-1] = #{pi : pi(1) = a}
};

std::map<std::uint32_t, KcycleTally> kcycle_tally(std::uint32_t n, std::uint32_t k,
                                                  std::uint32_t max_n) {
  std::map<std::uint32_t, KcycleTally> out;
  enumerate_sn(
      n,
      [&](const Permutation& p) {
        auto& t = out[static_cast<std::uint32_t>(count_k_cycles(p, k))];
        if (t.letter_sums.empty()) {
          t.letter_sums.assign(n, 0);
          t.first_letter.assign(n, 0);
        }
        t.population += 1;
        const auto word = p.one_line();
        for (std::uint32_t i = 0; i < n; ++i) t.letter_sums[i] += word[i];
        if (n > 0) t.first_letter[word[0] - 1] += 1;
      },
      max_n);
  return out;
}

std::string args(std::initializer_list<std::pair<const char*, std::int64_t>> named) {
  std::string out = "(";
  for (const auto& [name, value] : named) {
    if (out.size() > 1) out += ", ";
    out += std::string(name) + "=" + std::to_string(value);
  }
  return out + ")";
}

}  // namespace

BigInt brute_count_kcycles(std::uint32_t n, std::uint32_t m, std::uint32_t k, std::uint32_t max_n) {
  if (k == 0) fail(ErrorCode::domain, "k must be positive");
  BigInt count = 0;
  enumerate_sn(n, [&](const Permutation& p) { count += count_k_cycles(p, k) == m; }, max_n);
  return count;
}

BigRational brute_expected_letter(std::uint32_t n, std::uint32_t m, std::uint32_t k,
                                  std::uint32_t i, std::uint32_t max_n) {
  if (k == 0) fail(ErrorCode::domain, "k must be positive");
  if (i < 1 || i > n) fail(ErrorCode::domain, "position outside 1..n");
  const auto tally = kcycle_tally(n, k, max_n);
  auto it = tally.find(m);
  if (it == tally.end()) {
    fail(ErrorCode::empty_population, "no permutation of S_" + std::to_string(n) + " has " +
                                          std::to_string(m) + " " + std::to_string(k) + "-cycles");
  }
  return make_rational(it->second.letter_sums[i - 1], it->second.population);
}

BigInt brute_first_letter_count(std::uint32_t n, std::uint32_t m, std::uint32_t k, std::uint32_t a,
                                std::uint32_t max_n) {
  if (k == 0) fail(ErrorCode::domain, "k must be positive");
  if (a < 1 || a > n) fail(ErrorCode::domain, "first letter outside 1..n");
  BigInt count = 0;
  enumerate_sn(
      n,
      [&](const Permutation& p) { count += p.letter_at(1) == a && count_k_cycles(p, k) == m; },
      max_n);
  return count;
}

std::map<std::uint32_t, BigInt> brute_gsg_counts(std::uint32_t k, std::uint32_t n,
                                                 std::uint64_t budget) {
  std::map<std::uint32_t, BigInt> out;
  enumerate_gsg(
      k, n, [&](const GsgElement& g) { out[static_cast<std::uint32_t>(fixed_points(g).size())] += 1; },
      budget);
  return out;
}

BigRational brute_mahonian_expectation(std::uint32_t n, Statistic which, std::uint64_t value,
                                       std::uint32_t max_n) {
  BigInt population = 0;
  BigInt sum = 0;
  enumerate_sn(
      n,
      [&](const Permutation& p) {
        const auto word = p.one_line();
        if (statistic(std::span<const Letter>(word), which) != value) return;
        population += 1;
        sum += word.front();
      },
      max_n);
  if (population == 0) {
    fail(ErrorCode::empty_population, "no permutation of S_" + std::to_string(n) + " has " +
                                          to_string(which) + " = " + std::to_string(value));
  }
  return make_rational(sum, population);
}

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name << " [" << c.range << "] "
       << static_cast<long long>(c.elapsed.count()) << " ms\n";
    if (!c.passed) os << "     counterexample: " << c.counterexample << '\n';
    passed += c.passed;
  }
  os << passed << "/" << checks.size() << " checks passed\n";
  return os.str();
}

std::string VerificationReport::to_json() const {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json r = {{"name", c.name},
                        {"range", c.range},
                        {"passed", c.passed},
                        {"elapsed_ms", static_cast<std::int64_t>(c.elapsed.count())}};
    if (!c.passed) r["counterexample"] = c.counterexample;
    records.push_back(std::move(r));
  }
  return nlohmann::json{{"all_passed", all_passed()}, {"checks", records}}.dump(2);
}

ClosedForms ClosedForms::library() {
  return {[](std::int64_t n, std::int64_t m, std::int64_t k) { return count_kcycle_perms(n, m, k); },
          [](std::int64_t n, std::int64_t m, std::int64_t k) {
            return expected_first_letter(n, m, k);
          }};
}

namespace {

using Finding = std::optional<std::string>;

CheckResult run_check(std::string name, std::string range, const std::function<Finding()>& body) {
  CheckResult result;
  result.name = std::move(name);
  result.range = std::move(range);
  const auto start = std::chrono::steady_clock::now();
  try {
    if (auto found = body()) {
      result.passed = false;
      result.counterexample = *found;
    }
  } catch (const std::exception& e) {
    result.passed = false;
    result.counterexample = std::string("exception: ") + e.what();
  }
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

std::string differ(const std::string& where, const std::string& lhs, const std::string& rhs) {
  return where + ": " + lhs + " != " + rhs;
}

}  // namespace

CheckResult check_counts_against_oracle(const ClosedForms& forms, const VerificationBudget& budget) {
  return run_check("counts_vs_oracle", "n<=" + std::to_string(budget.max_n) + ", 1<=k<=n, all m",
                   [&]() -> Finding {
                     for (std::uint32_t n = 1; n <= budget.max_n; ++n) {
                       for (std::uint32_t k = 1; k <= n; ++k) {
                         const auto tally = kcycle_tally(n, k, budget.max_n);
                         for (std::uint32_t m = 0; m <= n / k + 1; ++m) {
                           auto it = tally.find(m);
                           const BigInt brute = it == tally.end() ? BigInt(0) : it->second.population;
                           const BigInt closed = forms.count(n, m, k);
                           if (closed != brute) {
                             return differ("C" + args({{"n", n}, {"m", m}, {"k", k}}),
                                             to_string(closed), to_string(brute));
                           }
                         }
                       }
                     }
                     return std::nullopt;
                   });
}

CheckResult check_expectations_against_oracle(const ClosedForms& forms,
                                              const VerificationBudget& budget) {
  return run_check(
      "expected_first_letter_vs_oracle", "n<=" + std::to_string(budget.max_n) + ", 2<=k<=n, all m",
      [&]() -> Finding {
        for (std::uint32_t n = 2; n <= budget.max_n; ++n) {
          for (std::uint32_t k = 2; k <= n; ++k) {
            for (const auto& [m, t] : kcycle_tally(n, k, budget.max_n)) {
              const BigRational brute = make_rational(t.letter_sums[0], t.population);
              const BigRational closed = forms.expected_first(n, m, k);
              if (closed != brute) {
                return differ("E[pi(1)]" + args({{"n", n}, {"m", m}, {"k", k}}),
                                to_string(closed), to_string(brute));
              }
            }
          }
        }
        return std::nullopt;
      });
}

namespace {

std::vector<CheckResult> permutation_checks(const VerificationBudget& b) {
  std::vector<CheckResult> out;
  const std::uint32_t max_n = b.max_n;

  out.push_back(run_check("cycle_lengths_sum_to_n", "S_n, n<=" + std::to_string(max_n), [&]() -> Finding {
    for (std::uint32_t n = 0; n <= max_n; ++n) {
      std::optional<std::string> bad;
      enumerate_sn(n, [&](const Permutation& p) {
        std::size_t total = 0;
        for (std::size_t k = 1; k <= n; ++k) total += k * count_k_cycles(p, k);
        if (total != n && !bad) bad = format_cycles(p, Alphabet::decimal);
      }, max_n);
      if (bad) return "cycle lengths of " + *bad + " do not sum to n";
    }
    return std::nullopt;
  }));

  const std::uint32_t fmt_n = std::min<std::uint32_t>(max_n, 7);
  out.push_back(run_check("canonical_form", "S_n, n<=" + std::to_string(fmt_n), [&]() -> Finding {
    for (std::uint32_t n = 0; n <= fmt_n; ++n) {
      std::optional<std::string> bad;
      enumerate_sn(n, [&](const Permutation& p) {
        if (bad) return;
        // Scramble: rotate every cycle by one and reverse the cycle order.
        auto cycles = p.cycles();
        for (auto& c : cycles) std::rotate(c.begin(), c.begin() + 1, c.end());
        std::reverse(cycles.begin(), cycles.end());
        const Permutation scrambled(cycles);
        const Permutation c = canonicalize(scrambled);
        if (!c.is_canonical() || canonicalize(c) != c) {
          bad = "canonicalize not idempotent on " + format_cycles(p, Alphabet::decimal);
          return;
        }
        for (Letter i = 1; i <= n; ++i) {
          if (c.letter_at(i) != scrambled.letter_at(i)) {
            bad = "canonicalize moved the image of " + std::to_string(i);
            return;
          }
        }
        for (Alphabet a : {Alphabet::decimal, Alphabet::base36}) {
          if (parse_cycles(format_cycles(scrambled, a), a) != c) {
            bad = "format/parse round trip failed for " + format_cycles(p, Alphabet::decimal);
            return;
          }
        }
      }, max_n);
      if (bad) return bad;
    }
    return std::nullopt;
  }));

  const std::uint32_t mah_n = std::min<std::uint32_t>(max_n, 8);
  out.push_back(run_check("inv_maj_equidistributed", "S_n, n<=" + std::to_string(mah_n), [&]() -> Finding {
    for (std::uint32_t n = 0; n <= mah_n; ++n) {
      std::map<std::uint64_t, std::uint64_t> inv;
      std::map<std::uint64_t, std::uint64_t> maj;
      enumerate_sn(n, [&](const Permutation& p) {
        const auto w = p.one_line();
        ++inv[statistic(std::span<const Letter>(w), Statistic::inv)];
        ++maj[statistic(std::span<const Letter>(w), Statistic::maj)];
      }, max_n);
      if (inv != maj) return "inv and maj histograms differ for n=" + std::to_string(n);
      const auto row = mahonian_row(n);
      for (const auto& [j, count] : inv) {
        if (j >= row.size() || row[j] != count) {
          return differ("M" + args({{"n", n}, {"j", static_cast<std::int64_t>(j)}}),
                          j < row.size() ? to_string(row[j]) : "0", std::to_string(count));
        }
      }
    }
    return std::nullopt;
  }));
  return out;
}

std::vector<CheckResult> counting_checks(const VerificationBudget& b) {
  std::vector<CheckResult> out;
  const auto cf_n = static_cast<std::int64_t>(b.closed_form_n);

  out.push_back(run_check("counts_partition_n_factorial", "1<=n<=9, 1<=k<=n", [&]() -> Finding {
    for (std::int64_t n = 1; n <= 9; ++n) {
      for (std::int64_t k = 1; k <= n; ++k) {
        BigInt total = 0;
        for (std::int64_t m = 0; m <= n / k; ++m) total += count_kcycle_perms(n, m, k);
        if (total != factorial(static_cast<std::uint64_t>(n))) {
          return differ("sum_m C" + args({{"n", n}, {"k", k}}), to_string(total), "n!");
        }
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check("closed_form_vs_recurrence",
                          "n<=" + std::to_string(cf_n) + ", k<=6, m>=1", [&]() -> Finding {
    for (std::int64_t k = 1; k <= 6; ++k) {
      for (std::int64_t n = 0; n <= cf_n; ++n) {
        for (std::int64_t m = 1; m <= n / k + 1; ++m) {
          const BigInt a = count_kcycle_perms(n, m, k);
          const BigInt r = count_kcycle_perms_recursive(n, m, k);
          if (a != r) {
            return differ("C" + args({{"n", n}, {"m", m}, {"k", k}}), to_string(a), to_string(r));
          }
        }
      }
    }
    return std::nullopt;
  }));

  out.push_back(check_counts_against_oracle(ClosedForms::library(), b));

  out.push_back(run_check("first_letter_decomposition", "2<=n<=20, 2<=k<=6, a in {1,2,n}", [&]() -> Finding {
    for (std::int64_t k = 2; k <= 6; ++k) {
      for (std::int64_t n = 2; n <= 20; ++n) {
        for (std::int64_t m = 0; m <= n / k; ++m) {
          const BigInt first = count_with_first_letter(n, m, k, 1);
          for (std::int64_t a : {std::int64_t{2}, n}) {
            const BigInt rest = count_with_first_letter(n, m, k, a);
            if (first + (n - 1) * rest != count_kcycle_perms(n, m, k)) {
              return "C^(1) + (n-1) C^(a) != C at " + args({{"n", n}, {"m", m}, {"k", k}, {"a", a}});
            }
          }
        }
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check("first_letter_vs_oracle", "2<=n<=" + std::to_string(b.max_n) + ", 2<=k<=n",
                          [&]() -> Finding {
    for (std::uint32_t n = 2; n <= b.max_n; ++n) {
      for (std::uint32_t k = 2; k <= n; ++k) {
        for (const auto& [m, t] : kcycle_tally(n, k, b.max_n)) {
          for (std::uint32_t a = 1; a <= n; ++a) {
            const BigInt closed = count_with_first_letter(n, m, k, a);
            if (closed != t.first_letter[a - 1]) {
              return differ("C^(a)" + args({{"n", n}, {"m", m}, {"k", k}, {"a", a}}),
                              to_string(closed), to_string(t.first_letter[a - 1]));
            }
          }
        }
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check("difference_formula", "1<=n<=" + std::to_string(cf_n) + ", k<=6",
                          [&]() -> Finding {
    for (std::int64_t k = 1; k <= 6; ++k) {
      for (std::int64_t n = 1; n <= cf_n; ++n) {
        for (std::int64_t m = 0; m <= n / k + 1; ++m) {
          const BigInt closed = count_difference(n, m, k);
          const BigInt direct = count_kcycle_perms(n, m, k) - n * count_kcycle_perms(n - 1, m, k);
          if (closed != direct) {
            return differ("C(n,m) - n C(n-1,m) at " + args({{"n", n}, {"m", m}, {"k", k}}),
                            to_string(closed), to_string(direct));
          }
        }
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check("egf_identities", "k in 2..5, order " + std::to_string(b.series_order),
                          [&]() -> Finding {
    for (std::int64_t k = 2; k <= 5; ++k) {
      const auto target = egf_target_series(k, b.series_order);
      const auto product = PowerSeries::exponential(-1, b.series_order) *
                           PowerSeries::geometric(k, b.series_order);
      const auto cycles = egf_lhs_cycles(k, b.series_order);
      const auto derangements = egf_lhs_derangements(k, b.series_order);
      for (std::size_t j = 0; j <= b.series_order; ++j) {
        const auto where = "x^" + std::to_string(j) + " for k=" + std::to_string(k);
        if (target[j] != product[j]) return differ(where + " target vs product", to_string(target[j]), to_string(product[j]));
        if (cycles[j] != target[j]) return differ(where + " cycles", to_string(cycles[j]), to_string(target[j]));
        if (derangements[j] != target[j]) return differ(where + " derangements", to_string(derangements[j]), to_string(target[j]));
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check("gsg_fixed_point_counts_sum", "k<=4, n<=6", [&]() -> Finding {
    for (std::int64_t k = 1; k <= 4; ++k) {
      for (std::int64_t n = 0; n <= 6; ++n) {
        BigInt total = 0;
        for (std::int64_t m = 0; m <= n; ++m) total += gsg_fixed_point_count(k, n, m);
        const BigInt order = power(k, static_cast<std::uint64_t>(n)) * factorial(static_cast<std::uint64_t>(n));
        if (total != order) {
          return differ("sum_m F" + args({{"k", k}, {"n", n}}), to_string(total), to_string(order));
        }
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check("mahonian_sum_and_symmetry", "n<=9", [&]() -> Finding {
    for (std::int64_t n = 0; n <= 9; ++n) {
      const auto row = mahonian_row(n);
      BigInt total = 0;
      for (std::size_t j = 0; j < row.size(); ++j) {
        total += row[j];
        if (row[j] != row[row.size() - 1 - j]) return "M(n,j) not symmetric at n=" + std::to_string(n);
      }
      if (total != factorial(static_cast<std::uint64_t>(n))) return "sum_j M(n,j) != n! at n=" + std::to_string(n);
      if (static_cast<std::int64_t>(row.size()) != n * (n - 1) / 2 + 1 && n > 0) {
        return "M(n,.) has the wrong degree at n=" + std::to_string(n);
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check("c_identity", "1<=k<=4, n+m<=6", [&]() -> Finding {
    for (std::int64_t k = 1; k <= 4; ++k) {
      for (std::int64_t n = 0; n <= 6; ++n) {
        for (std::int64_t m = 0; n + m <= 6; ++m) {
          if (!c_identity_check(k, n, m)) return "identity fails at " + args({{"k", k}, {"n", n}, {"m", m}});
        }
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check("fixed_points_cycles_identity", "2<=k<=4, 0<=m<=n<=6", [&]() -> Finding {
    for (std::int64_t k = 2; k <= 4; ++k) {
      for (std::int64_t n = 0; n <= 6; ++n) {
        for (std::int64_t m = 0; m <= n; ++m) {
          if (!fixed_points_cycles_identity_check(k, n, m)) {
            return "identity fails at " + args({{"k", k}, {"n", n}, {"m", m}});
          }
        }
      }
    }
    return std::nullopt;
  }));
  return out;
}

std::vector<CheckResult> gsg_checks(const VerificationBudget& b) {
  std::vector<CheckResult> out;
  out.push_back(run_check("gsg_fixed_point_histogram", "k<=4, n<=5, k^n n! <= " + std::to_string(b.max_gsg),
                          [&]() -> Finding {
    for (std::uint32_t k = 1; k <= 4; ++k) {
      for (std::uint32_t n = 0; n <= 5; ++n) {
        if (gsg_order(k, n) > b.max_gsg) continue;
        const auto histogram = brute_gsg_counts(k, n, b.max_gsg);
        for (std::uint32_t m = 0; m <= n; ++m) {
          auto it = histogram.find(m);
          const BigInt brute = it == histogram.end() ? BigInt(0) : it->second;
          const BigInt closed = gsg_fixed_point_count(k, n, m);
          if (brute != closed) {
            return differ("F" + args({{"k", k}, {"n", n}, {"m", m}}), to_string(closed), to_string(brute));
          }
        }
        const BigInt derangements = histogram.count(0) ? histogram.at(0) : BigInt(0);
        if (derangements != derangements_gsg(k, n)) {
          return differ("D" + args({{"k", k}, {"n", n}}), to_string(derangements_gsg(k, n)),
                          to_string(derangements));
        }
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check("gsg_action_shape", "k<=3, n<=3, all sequences", [&]() -> Finding {
    for (std::uint32_t k = 1; k <= 3; ++k) {
      for (std::uint32_t n = 0; n <= 3; ++n) {
        // all sequences in (Z/k)^n
        std::vector<std::vector<Residue>> sequences{{}};
        for (std::uint32_t i = 0; i < n; ++i) {
          std::vector<std::vector<Residue>> next;
          for (const auto& s : sequences) {
            for (Residue r = 0; r < k; ++r) {
              auto t = s;
              t.push_back(r);
              next.push_back(std::move(t));
            }
          }
          sequences = std::move(next);
        }
        const auto id = GsgElement::identity(k, n);
        std::optional<std::string> bad;
        enumerate_gsg(k, n, [&](const GsgElement& g) {
          for (const auto& s : sequences) {
            if (act(g, s).size() != s.size() && !bad) bad = "act changed the length";
            if (act(id, s) != s && !bad) bad = "identity moved a sequence";
          }
        }, b.max_gsg);
        if (bad) return *bad + " at " + args({{"k", k}, {"n", n}});
      }
    }
    return std::nullopt;
  }));
  return out;
}

std::vector<CheckResult> expectation_checks(const VerificationBudget& b) {
  std::vector<CheckResult> out;
  out.push_back(check_expectations_against_oracle(ClosedForms::library(), b));

  out.push_back(run_check("expectation_forms_agree", "k in 2..4, group index n<=4", [&]() -> Finding {
    for (std::int64_t k = 2; k <= 4; ++k) {
      for (std::int64_t n = 1; n <= 4; ++n) {
        for (std::int64_t m = 0; m <= n; ++m) {
          const auto a = expected_first_letter(k * n, m, k);
          const auto d = expected_first_letter_derangement_form(n, m, k);
          if (a != d) return differ("E" + args({{"kn", k * n}, {"m", m}, {"k", k}}), to_string(a), to_string(d));
        }
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check("k_not_dividing_n_is_uniform", "n<=40, 2<=k<=6", [&]() -> Finding {
    for (std::int64_t k = 2; k <= 6; ++k) {
      for (std::int64_t n = 1; n <= 40; ++n) {
        if (n % k == 0) continue;
        for (std::int64_t m = 0; m <= n / k; ++m) {
          const auto e = expected_first_letter(n, m, k);
          if (e != make_rational(n + 1, 2)) {
            return differ("E" + args({{"n", n}, {"m", m}, {"k", k}}), to_string(e), "(n+1)/2");
          }
        }
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check("deviation_bound_and_sign", "k in 2..4, group index n<=8", [&]() -> Finding {
    for (std::int64_t k = 2; k <= 4; ++k) {
      for (std::int64_t n = 1; n <= 8; ++n) {
        BigRational previous = 1;
        // m runs downward so n - m grows and the deviation must shrink.
        for (std::int64_t m = n; m >= 0; --m) {
          const BigRational deviation = expected_first_letter_derangement_form(n, m, k) - make_rational(k * n + 1, 2);
          const BigRational size = abs(deviation);
          const bool bound_ok = size <= make_rational(1, 2) && size <= previous && (m != n || size == make_rational(1, 2));
          const bool sign_ok = ((n - m) % 2 == 0) ? deviation > 0 : deviation < 0;
          if (!bound_ok || !sign_ok) {
            return "deviation " + to_string(deviation) + " at " + args({{"n", n}, {"m", m}, {"k", k}});
          }
          previous = size;
        }
      }
    }
    return std::nullopt;
  }));

  const auto letter_limit = static_cast<std::int64_t>(std::min(b.max_kn_letter, b.max_n));
  out.push_back(run_check("ith_letter_vs_oracle", "kn<=" + std::to_string(letter_limit) + ", all i, m",
                          [&]() -> Finding {
    for (std::int64_t k = 2; k <= letter_limit; ++k) {
      for (std::int64_t n = 1; k * n <= letter_limit; ++n) {
        const auto kn = static_cast<std::uint32_t>(k * n);
        const auto tally = kcycle_tally(kn, static_cast<std::uint32_t>(k), b.max_n);
        for (std::int64_t m = 0; m <= n; ++m) {
          const auto& t = tally.at(static_cast<std::uint32_t>(m));
          for (std::int64_t i = 1; i <= k * n; ++i) {
            const auto closed = expected_letter_at(n, m, k, i);
            const auto brute = make_rational(t.letter_sums[static_cast<std::size_t>(i - 1)], t.population);
            if (closed != brute) {
              return differ("E[pi(i)]" + args({{"n", n}, {"m", m}, {"k", k}, {"i", i}}), to_string(closed),
                              to_string(brute));
            }
          }
        }
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check("ith_letter_sum_and_midpoint", "kn<=" + std::to_string(b.max_kn_sum), [&]() -> Finding {
    const auto limit = static_cast<std::int64_t>(b.max_kn_sum);
    for (std::int64_t k = 2; k <= limit; ++k) {
      for (std::int64_t n = 1; k * n <= limit; ++n) {
        const std::int64_t kn = k * n;
        for (std::int64_t m = 0; m <= n; ++m) {
          BigRational total = 0;
          for (std::int64_t i = 1; i <= kn; ++i) total += expected_letter_at(n, m, k, i);
          if (total != make_rational(kn * (kn + 1), 2)) {
            return differ("sum_i E[pi(i)]" + args({{"n", n}, {"m", m}, {"k", k}}), to_string(total),
                            "kn(kn+1)/2");
          }
          if (kn % 2 == 1 && expected_letter_at(n, m, k, (kn + 1) / 2) != make_rational(kn + 1, 2)) {
            return "midpoint is not (kn+1)/2 at " + args({{"n", n}, {"m", m}, {"k", k}});
          }
        }
      }
    }
    return std::nullopt;
  }));
  return out;
}

std::vector<CheckResult> bijection_checks(const VerificationBudget& b) {
  std::vector<CheckResult> out;
  const std::uint32_t limit = std::min(b.max_bijection_n, b.max_n);
  out.push_back(run_check("bijection_properties",
                          "n<=" + std::to_string(limit) + ", k in 2..5, all (p, x)", [&]() -> Finding {
    for (std::uint32_t k = 2; k <= 5; ++k) {
      for (std::uint32_t n = 1; n <= limit; ++n) {
        std::set<std::vector<Letter>> image;
        std::optional<std::string> bad;
        enumerate_sn(n - 1, [&](const Permutation& p) {
          if (bad) return;
          for (Letter x = 1; x <= n && !bad; ++x) {
            const auto where = format_cycles(p, Alphabet::decimal) + ", x=" + std::to_string(x) +
                               ", k=" + std::to_string(k);
            InsertionTrace trace;
            const auto inserted = insert(p, x, k, &trace);
            const auto& q = inserted.perm;
            if (q.size() != n || !q.contiguous_support()) {
              bad = "insert left S_n at " + where;
              return;
            }
            if (!q.is_canonical()) {
              bad = "non-canonical output at " + where;
              return;
            }
            for (const auto& step : trace.steps) {
              const bool phi = is_phi(step.rule);
              const auto residue = step.input_letters % k;
              const auto expected = (phi ? n - 1 : n) % k;
              if (!step.result.is_canonical()) bad = "non-canonical intermediate at " + where;
              if (residue != expected) bad = "letter count not congruent mod k at " + where;
            }
            if (bad) return;
            image.insert(q.one_line());
            if (inserted.preservation_guaranteed != (n % k != 0)) {
              bad = "wrong preservation flag at " + where;
              return;
            }
            if (n % k != 0 && count_k_cycles(q, k) != count_k_cycles(p, k)) {
              bad = "k-cycle count changed at " + where;
              return;
            }
            const auto back = extract(q, k);
            if (back.perm != p.canonical() || back.letter != x) {
              bad = "round trip failed at " + where;
              return;
            }
          }
        }, b.max_n);
        if (bad) return bad;
        if (image.size() != static_cast<std::size_t>(factorial(n).get_ui())) {
          return "image of insert has " + std::to_string(image.size()) + " elements for n=" + std::to_string(n) +
                 ", k=" + std::to_string(k);
        }
      }
    }
    return std::nullopt;
  }));
  return out;
}

std::vector<CheckResult> oracle_and_conjecture_checks(const VerificationBudget& b) {
  std::vector<CheckResult> out;
  out.push_back(run_check("oracle_partition", "n<=" + std::to_string(b.max_n) + ", 1<=k<=n", [&]() -> Finding {
    for (std::uint32_t n = 1; n <= b.max_n; ++n) {
      for (std::uint32_t k = 1; k <= n; ++k) {
        BigInt total = 0;
        for (const auto& [m, t] : kcycle_tally(n, k, b.max_n)) total += t.population;
        if (total != factorial(n)) return "oracle counts do not sum to n! at n=" + std::to_string(n);
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check("mahonian_denominator_divides_count", "n<=" + std::to_string(b.max_n),
                          [&]() -> Finding {
    for (std::uint32_t n = 1; n <= b.max_n; ++n) {
      const auto row = mahonian_row(n);
      for (std::size_t j = 0; j < row.size(); ++j) {
        const auto e = brute_mahonian_expectation(n, Statistic::inv, j, b.max_n);
        if (row[j] % e.get_den() != 0) {
          return "denominator of " + to_string(e) + " does not divide M" +
                 args({{"n", n}, {"j", static_cast<std::int64_t>(j)}});
        }
      }
    }
    return std::nullopt;
  }));

  const std::uint32_t conj_n = std::min<std::uint32_t>(b.max_n, 6);
  out.push_back(run_check("conjecture_report_deterministic", "n<=" + std::to_string(conj_n), [&]() -> Finding {
    const auto first = check_conjectures(conj_n);
    const auto second = check_conjectures(conj_n);
    if (first.cells.size() != second.cells.size()) return std::string("report sizes differ");
    for (std::size_t i = 0; i < first.cells.size(); ++i) {
      const auto& x = first.cells[i];
      const auto& y = second.cells[i];
      if (x.n != y.n || x.value != y.value || x.conjectured != y.conjectured || x.brute != y.brute) {
        return "report cell " + std::to_string(i) + " differs between runs";
      }
    }
    return std::nullopt;
  }));
  return out;
}

}  // namespace

VerificationReport verify_all(const VerificationBudget& budget) {
  VerificationReport report;
  for (auto* group : {&permutation_checks, &counting_checks, &gsg_checks, &expectation_checks,
                      &bijection_checks, &oracle_and_conjecture_checks}) {
    auto results = (*group)(budget);
    report.checks.insert(report.checks.end(), std::make_move_iterator(results.begin()),
                         std::make_move_iterator(results.end()));
  }
  return report;
}

}  // namespace kcycles
