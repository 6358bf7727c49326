#include <algorithm>
#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kcycles/kcycles.h"

namespace {

enum Exit { exit_ok = 0, exit_usage = 1, exit_verification = 2, exit_resource = 3 };

struct Failure {
  int code;
  std::string message;
};

int exit_code_for(kc_status status) {
  switch (status) {
    case KC_ERR_RESOURCE:
    case KC_ERR_NETWORK:
      return exit_resource;
    case KC_ERR_INTERNAL:
      return exit_verification;
    default:
      return exit_usage;
  }
}

void check(kc_status status) {
  if (status != KC_OK) throw Failure{exit_code_for(status), std::string(kc_status_name(status)) + ": " + kc_last_error()};
}

class Text {
 public:
  Text() = default;
  Text(const Text&) = delete;
  Text& operator=(const Text&) = delete;
  ~Text() { kc_string_free(p_); }
  char** out() {
    kc_string_free(p_);
    p_ = nullptr;
    return &p_;
  }
  std::string str() const { return p_ ? p_ : ""; }

 private:
  char* p_ = nullptr;
};

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Perm = std::unique_ptr<kc_perm, Deleter<kc_perm, kc_perm_free>>;
using Trace = std::unique_ptr<kc_trace, Deleter<kc_trace, kc_trace_free>>;
using Table = std::unique_ptr<kc_table, Deleter<kc_table, kc_table_free>>;
using Report = std::unique_ptr<kc_report, Deleter<kc_report, kc_report_free>>;
using Conjectures = std::unique_ptr<kc_conjectures, Deleter<kc_conjectures, kc_conjectures_free>>;

kc_format parse_format(const std::string& name) {
  if (name == "plain" || name == "text") return KC_FORMAT_PLAIN;
  if (name == "markdown" || name == "md") return KC_FORMAT_MARKDOWN;
  if (name == "csv") return KC_FORMAT_CSV;
  return KC_FORMAT_JSON;
}

const std::vector<std::string> formats = {"plain", "markdown", "csv", "json"};

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

// count

struct CountArgs {
  std::int64_t k = 2;
  std::int64_t n = 0;
  std::optional<std::int64_t> m;
  std::string format = "plain";
};

int run_count(const CountArgs& a) {
  std::vector<std::int64_t> ms;
  if (a.m) {
    ms.push_back(*a.m);
  } else {
    if (a.k < 1) throw Failure{exit_usage, "--k must be at least 1"};
    for (std::int64_t m = 0; m <= std::max<std::int64_t>(a.n, 0) / a.k; ++m) ms.push_back(m);
  }
  std::vector<std::string> values;
  for (auto m : ms) {
    Text value;
    check(kc_count(a.n, m, a.k, value.out()));
    if (m >= 1) {
      Text recursive;
      check(kc_count_recursive(a.n, m, a.k, recursive.out()));
      if (recursive.str() != value.str()) {
        throw Failure{exit_verification, "closed form " + value.str() + " disagrees with the recurrence " +
                                             recursive.str() + " at n=" + std::to_string(a.n) +
                                             " m=" + std::to_string(m) + " k=" + std::to_string(a.k)};
      }
    }
    values.push_back(value.str());
  }
  if (a.format == "json") {
    std::cout << "{\"k\": " << a.k << ", \"n\": " << a.n << ", \"counts\": [";
    for (std::size_t i = 0; i < ms.size(); ++i) {
      std::cout << (i ? ", " : "") << "{\"m\": " << ms[i] << ", \"count\": \"" << values[i] << "\"}";
    }
    std::cout << "]}\n";
  } else if (a.format == "csv") {
    std::cout << "k,n,m,count\n";
    for (std::size_t i = 0; i < ms.size(); ++i) std::cout << a.k << ',' << a.n << ',' << ms[i] << ',' << values[i] << '\n';
  } else {
    for (std::size_t i = 0; i < values.size(); ++i) std::cout << (i ? " " : "") << values[i];
    std::cout << '\n';
  }
  return exit_ok;
}

// expect

struct ExpectArgs {
  std::int64_t k = 2;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::optional<std::int64_t> i;
  std::uint32_t oracle_max_n = 9;
  std::string format = "plain";
};

std::string expected_value(const ExpectArgs& a) {
  const bool divisible = a.k >= 1 && a.n >= 1 && a.n % a.k == 0;
  const std::int64_t position = a.i.value_or(1);
  if (position == 1) {
    Text ratio;
    check(kc_expected_first_letter(a.n, a.m, a.k, ratio.out()));
    if (divisible) {
      Text derangement;
      check(kc_expected_first_letter_derangement_form(a.n / a.k, a.m, a.k, derangement.out()));
      if (derangement.str() != ratio.str()) {
        throw Failure{exit_verification, "count ratio " + ratio.str() + " disagrees with the derangement form " +
                                             derangement.str()};
      }
    }
    return ratio.str();
  }
  Text value;
  if (divisible) {
    check(kc_expected_letter_at(a.n / a.k, a.m, a.k, position, value.out()));
    return value.str();
  }
  if (a.n < 0 || a.n > static_cast<std::int64_t>(a.oracle_max_n)) {
    throw Failure{exit_usage, "--i with k not dividing n is answered by enumeration, which is limited to n <= " +
                                  std::to_string(a.oracle_max_n) + " (raise --oracle-max-n to allow more)"};
  }
  if (a.m < 0 || a.k < 1 || position < 1) throw Failure{exit_usage, "--m, --k and --i must be positive"};
  check(kc_oracle_expected_letter(static_cast<std::uint32_t>(a.n), static_cast<std::uint32_t>(a.m),
                                  static_cast<std::uint32_t>(a.k), static_cast<std::uint32_t>(position),
                                  a.oracle_max_n, value.out()));
  return value.str();
}

int run_expect(const ExpectArgs& a) {
  const auto value = expected_value(a);
  if (a.format == "json") {
    const auto slash = value.find('/');
    const auto num = value.substr(0, slash);
    const auto den = slash == std::string::npos ? "1" : value.substr(slash + 1);
    std::cout << "{\"k\": " << a.k << ", \"n\": " << a.n << ", \"m\": " << a.m << ", \"i\": " << a.i.value_or(1)
              << ", \"numerator\": \"" << num << "\", \"denominator\": \"" << den << "\"}\n";
  } else {
    std::cout << value << '\n';
  }
  return exit_ok;
}

// table

struct TableArgs {
  std::int64_t k = 2;
  std::int64_t n_max = 13;
  std::string format = "markdown";
  std::string style = "reduced";
};

int run_table(const TableArgs& a) {
  kc_table* raw = nullptr;
  check(kc_table_create(a.k, a.n_max, &raw));
  Table table(raw);
  Text text;
  check(kc_table_render(table.get(), parse_format(a.format), a.style == "figure1" ? KC_STYLE_FIGURE1 : KC_STYLE_REDUCED,
                        text.out()));
  std::cout << text.str();
  return exit_ok;
}

// biject

struct BijectArgs {
  std::string direction;
  std::uint32_t k = 2;
  std::string perm;
  std::optional<std::string> x;
  std::string alphabet = "decimal";
  std::string order = "paper";
  bool no_relabel = false;
  bool trace = false;
};

int run_biject(const BijectArgs& a) {
  const auto alphabet = a.alphabet == "base36" ? KC_ALPHABET_BASE36 : KC_ALPHABET_DECIMAL;
  const auto order = a.order == "reversed" ? KC_ORDER_REVERSED : KC_ORDER_PAPER;
  kc_perm* raw = nullptr;
  check(kc_perm_parse_cycles(a.perm.c_str(), alphabet, &raw));
  Perm input(raw);

  kc_perm* out_raw = nullptr;
  kc_trace* trace_raw = nullptr;
  int guaranteed = 0;
  std::uint32_t letter = 0;
  std::size_t n = 0;
  if (a.direction == "insert") {
    if (!a.x) throw Failure{exit_usage, "insert needs --x"};
    std::uint32_t x = 0;
    check(kc_perm_parse_letter(a.x->c_str(), alphabet, &x));
    check(kc_insert(input.get(), x, a.k, a.no_relabel ? 0 : 1, &out_raw, &guaranteed, a.trace ? &trace_raw : nullptr));
    letter = x;
  } else {
    check(kc_extract(input.get(), a.k, a.no_relabel ? 0 : 1, &out_raw, &letter, &guaranteed,
                     a.trace ? &trace_raw : nullptr));
  }
  Perm output(out_raw);
  Trace trace(trace_raw);
  check(kc_perm_size(a.direction == "insert" ? output.get() : input.get(), &n));

  if (!guaranteed) {
    std::cerr << "warning: preservation not guaranteed (k = " << a.k << " divides n = " << n << ")\n";
  }
  Text rendered;
  check(kc_perm_format(output.get(), alphabet, order, rendered.out()));
  std::cout << rendered.str() << '\n';
  if (a.direction == "extract") {
    Text text;
    check(kc_render_letter(letter, alphabet, text.out()));
    std::cout << text.str() << '\n';
  }
  if (trace) {
    Text steps;
    check(kc_trace_render(trace.get(), alphabet, steps.out()));
    std::cout << steps.str();
  }
  return exit_ok;
}

// verify

struct VerifyArgs {
  std::optional<std::uint32_t> max_n;
  std::optional<std::uint64_t> max_gsg;
  std::optional<std::uint32_t> max_bijection_n;
  std::string format = "text";
};

int run_verify(const VerifyArgs& a) {
  kc_budget budget;
  kc_budget_default(&budget);
  if (a.max_n) {
    budget.max_n = *a.max_n;
    budget.max_bijection_n = std::min(budget.max_bijection_n, *a.max_n);
    budget.max_kn_letter = std::min(budget.max_kn_letter, *a.max_n);
  }
  if (a.max_gsg) budget.max_gsg = *a.max_gsg;
  if (a.max_bijection_n) budget.max_bijection_n = *a.max_bijection_n;
  kc_report* raw = nullptr;
  check(kc_verify(&budget, &raw));
  Report report(raw);
  Text text;
  check(kc_report_render(report.get(), a.format == "json" ? KC_FORMAT_JSON : KC_FORMAT_PLAIN, text.out()));
  std::cout << text.str();
  int passed = 0;
  check(kc_report_all_passed(report.get(), &passed));
  return passed ? exit_ok : exit_verification;
}

// conjecture

struct ConjectureArgs {
  std::string which = "both";
  std::uint32_t n_max = 8;
  std::int64_t inv_max_value = 10;
  std::string format = "plain";
};

int run_conjecture(const ConjectureArgs& a) {
  const auto family = a.which == "inv" ? KC_FAMILY_INV : a.which == "maj" ? KC_FAMILY_MAJ : KC_FAMILY_BOTH;
  kc_conjectures* raw = nullptr;
  check(kc_conjectures_check(a.n_max, family, a.inv_max_value, &raw));
  Conjectures report(raw);
  Text text;
  check(kc_conjectures_render(report.get(), parse_format(a.format), text.out()));
  std::cout << text.str();
  return exit_ok;
}

// oeis

struct OeisArgs {
  std::string id;
  std::string match = "denominators";
  std::int64_t k = 2;
  std::int64_t n_max = 12;
  bool offline = false;
  std::string cache_dir;
  std::string format = "plain";
};

int run_oeis(const OeisArgs& a) {
  kc_alignment alignment{};
  Text query;
  Text path;
  check(kc_oeis_match_denominators(a.id.c_str(), a.cache_dir.empty() ? nullptr : a.cache_dir.c_str(),
                                   a.offline ? 1 : 0, a.k, a.n_max, &alignment, query.out(), path.out()));
  if (a.format == "json") {
    std::cout << "{\"id\": \"" << json_escape(a.id) << "\", \"source\": \""
              << (alignment.from_cache ? "cache" : "remote") << "\", \"path\": \"" << json_escape(path.str())
              << "\", \"k\": " << a.k << ", \"n_max\": " << a.n_max << ", \"denominators\": [";
    std::istringstream terms(query.str());
    std::string term;
    bool first = true;
    while (std::getline(terms, term, ',')) {
      term.erase(0, term.find_first_not_of(' '));
      std::cout << (first ? "" : ", ") << '"' << term << '"';
      first = false;
    }
    std::cout << "], \"offset\": " << alignment.offset << ", \"matched\": " << alignment.matched
              << ", \"terms\": " << alignment.query_terms << ", \"aligned\": " << (alignment.aligned ? "true" : "false")
              << "}\n";
    return exit_ok;
  }
  std::cout << "b-file: " << path.str() << (alignment.from_cache ? " (cached)" : " (downloaded)") << '\n';
  std::cout << "denominators (k = " << a.k << ", m = 0, n <= " << a.n_max << " with k | n): " << query.str() << '\n';
  std::cout << "matched prefix: " << alignment.matched << " of " << alignment.query_terms << " terms at offset "
            << alignment.offset << '\n';
  std::cout << (alignment.aligned ? "aligned" : "no alignment") << '\n';
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counts, expectations and bijections for permutations with m k-cycles"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kc_version());

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count", "number of permutations of n letters with exactly m k-cycles");
  count_cmd->add_option("--k", count.k, "cycle length")->required();
  count_cmd->add_option("--n", count.n, "number of letters")->required();
  count_cmd->add_option("--m", count.m, "number of k-cycles; omitted prints the whole row");
  count_cmd->add_option("--format", count.format)->check(CLI::IsMember({"plain", "csv", "json"}));

  ExpectArgs expect;
  auto* expect_cmd = app.add_subcommand("expect", "expected letter at a position, given m k-cycles");
  expect_cmd->add_option("--k", expect.k, "cycle length")->required();
  expect_cmd->add_option("--n", expect.n, "number of letters")->required();
  expect_cmd->add_option("--m", expect.m, "number of k-cycles")->required();
  expect_cmd->add_option("--i", expect.i, "position, default 1");
  expect_cmd->add_option("--oracle-max-n", expect.oracle_max_n, "enumeration limit when k does not divide n");
  expect_cmd->add_option("--format", expect.format)->check(CLI::IsMember({"plain", "json"}));

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "table of expected first letters");
  table_cmd->add_option("--k", table.k, "cycle length");
  table_cmd->add_option("--n-max", table.n_max, "largest n")->required();
  table_cmd->add_option("--format", table.format)->check(CLI::IsMember(formats));
  table_cmd->add_option("--style", table.style)->check(CLI::IsMember({"reduced", "figure1"}));

  BijectArgs biject;
  auto* biject_cmd = app.add_subcommand("biject", "apply the k-cycle preserving insertion or its inverse");
  biject_cmd->add_option("direction", biject.direction)->required()->check(CLI::IsMember({"insert", "extract"}));
  biject_cmd->add_option("--k", biject.k, "cycle length")->required()->check(CLI::Range(2u, 1000000u));
  biject_cmd->add_option("--perm", biject.perm, "permutation in cycle notation")->required();
  biject_cmd->add_option("--x", biject.x, "letter to insert");
  biject_cmd->add_option("--alphabet", biject.alphabet)->check(CLI::IsMember({"decimal", "base36"}));
  biject_cmd->add_option("--order", biject.order)->check(CLI::IsMember({"paper", "reversed"}));
  biject_cmd->add_flag("--no-relabel", biject.no_relabel, "apply the maps to the letters as given");
  biject_cmd->add_flag("--trace", biject.trace, "print the rule applied at each step");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "check every formula against enumeration");
  verify_cmd->add_option("--max-n", verify.max_n, "largest symmetric group enumerated");
  verify_cmd->add_option("--max-gsg", verify.max_gsg, "largest generalized symmetric group enumerated");
  verify_cmd->add_option("--max-bijection-n", verify.max_bijection_n, "largest n for exhaustive bijection checks");
  verify_cmd->add_option("--format", verify.format)->check(CLI::IsMember({"text", "json"}));

  ConjectureArgs conjecture;
  auto* conjecture_cmd = app.add_subcommand("conjecture", "compare the Mahonian conjectures with enumeration");
  conjecture_cmd->add_option("which", conjecture.which)->check(CLI::IsMember({"inv", "maj", "both"}));
  conjecture_cmd->add_option("--n-max", conjecture.n_max, "largest n enumerated")->check(CLI::Range(1u, 10u));
  conjecture_cmd->add_option("--inv-max-value", conjecture.inv_max_value, "largest inversion value tabulated");
  conjecture_cmd->add_option("--format", conjecture.format)->check(CLI::IsMember(formats));

  OeisArgs oeis;
  auto* oeis_cmd = app.add_subcommand("oeis", "align table denominators with an OEIS sequence");
  oeis_cmd->add_option("id", oeis.id, "sequence id, e.g. A000354")->required();
  oeis_cmd->add_option("--match", oeis.match)->check(CLI::IsMember({"denominators"}));
  oeis_cmd->add_option("--k", oeis.k, "cycle length");
  oeis_cmd->add_option("--n-max", oeis.n_max, "largest n");
  oeis_cmd->add_flag("--offline", oeis.offline, "use the cache only");
  oeis_cmd->add_option("--cache-dir", oeis.cache_dir, "b-file cache, default $KCYCLES_OEIS_CACHE or ~/.cache");
  oeis_cmd->add_option("--format", oeis.format)->check(CLI::IsMember({"plain", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*count_cmd) return run_count(count);
    if (*expect_cmd) return run_expect(expect);
    if (*table_cmd) return run_table(table);
    if (*biject_cmd) return run_biject(biject);
    if (*verify_cmd) return run_verify(verify);
    if (*conjecture_cmd) return run_conjecture(conjecture);
    if (*oeis_cmd) return run_oeis(oeis);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.code;
  }
  return exit_usage;
}
