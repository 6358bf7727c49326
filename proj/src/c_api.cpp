#include "kcycles/kcycles.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "kcycles/bijection.hpp"
#include "kcycles/counting.hpp"
#include "kcycles/error.hpp"
#include "kcycles/expectation.hpp"
#include "kcycles/mahonian.hpp"
#include "kcycles/oeis.hpp"
#include "kcycles/oracle.hpp"
#include "kcycles/permutation.hpp"
#include "kcycles/render.hpp"

struct kc_perm {
  kcycles::Permutation value;
};

struct kc_trace {
  kcycles::InsertionTrace value;
};

struct kc_table {
  kcycles::ExpectationTable value;
};

struct kc_report {
  kcycles::VerificationReport value;
};

struct kc_conjectures {
  kcycles::ConjectureReport value;
};

namespace {

thread_local std::string last_error;

kc_status status_of(kcycles::ErrorCode code) {
  using kcycles::ErrorCode;
  switch (code) {
    case ErrorCode::malformed_input: return KC_ERR_MALFORMED_INPUT;
    case ErrorCode::domain: return KC_ERR_DOMAIN;
    case ErrorCode::empty_population: return KC_ERR_EMPTY_POPULATION;
    case ErrorCode::unsupported: return KC_ERR_UNSUPPORTED;
    case ErrorCode::resource: return KC_ERR_RESOURCE;
    case ErrorCode::internal: return KC_ERR_INTERNAL;
    case ErrorCode::render: return KC_ERR_RENDER;
    case ErrorCode::network: return KC_ERR_NETWORK;
  }
  return KC_ERR_INTERNAL;
}

template <class F>
kc_status guarded(F&& body) {
  try {
    body();
    return KC_OK;
  } catch (const kcycles::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return KC_ERR_RESOURCE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return KC_ERR_INTERNAL;
  }
}

kc_status invalid(const char* what) {
  last_error = std::string("null argument: ") + what;
  return KC_ERR_INVALID_ARGUMENT;
}

char* dup(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class Value>
kc_status string_result(char** out, Value&& compute) {
  if (!out) return invalid("out");
  return guarded([&] { *out = dup(kcycles::to_string(compute())); });
}

kcycles::Alphabet alphabet_of(kc_alphabet a) {
  return a == KC_ALPHABET_BASE36 ? kcycles::Alphabet::base36 : kcycles::Alphabet::decimal;
}

kcycles::OutputFormat format_of(kc_format f) {
  switch (f) {
    case KC_FORMAT_MARKDOWN: return kcycles::OutputFormat::markdown;
    case KC_FORMAT_CSV: return kcycles::OutputFormat::csv;
    case KC_FORMAT_JSON: return kcycles::OutputFormat::json;
    default: return kcycles::OutputFormat::plain;
  }
}

}  // namespace

extern "C" {

const char* kc_last_error(void) { return last_error.c_str(); }

const char* kc_status_name(kc_status status) {
  switch (status) {
    case KC_OK: return "ok";
    case KC_ERR_MALFORMED_INPUT: return "malformed input";
    case KC_ERR_DOMAIN: return "domain error";
    case KC_ERR_EMPTY_POPULATION: return "empty population";
    case KC_ERR_UNSUPPORTED: return "unsupported parameter";
    case KC_ERR_RESOURCE: return "resource limit";
    case KC_ERR_INTERNAL: return "internal error";
    case KC_ERR_RENDER: return "rendering error";
    case KC_ERR_NETWORK: return "network error";
    case KC_ERR_INVALID_ARGUMENT: return "invalid argument";
  }
  return "unknown";
}

void kc_string_free(char* s) { std::free(s); }

const char* kc_version(void) { return "1.0.0"; }

kc_status kc_count(int64_t n, int64_t m, int64_t k, char** out) {
  return string_result(out, [&] { return kcycles::count_kcycle_perms(n, m, k); });
}

kc_status kc_count_recursive(int64_t n, int64_t m, int64_t k, char** out) {
  return string_result(out, [&] { return kcycles::count_kcycle_perms_recursive(n, m, k); });
}

kc_status kc_count_difference(int64_t n, int64_t m, int64_t k, char** out) {
  return string_result(out, [&] { return kcycles::count_difference(n, m, k); });
}

kc_status kc_count_first_letter(int64_t n, int64_t m, int64_t k, int64_t a, char** out) {
  return string_result(out, [&] { return kcycles::count_with_first_letter(n, m, k, a); });
}

kc_status kc_derangements(int64_t k, int64_t n, char** out) {
  return string_result(out, [&] { return kcycles::derangements_gsg(k, n); });
}

kc_status kc_gsg_fixed_point_count(int64_t k, int64_t n, int64_t m, char** out) {
  return string_result(out, [&] { return kcycles::gsg_fixed_point_count(k, n, m); });
}

kc_status kc_mahonian_count(int64_t n, int64_t j, char** out) {
  return string_result(out, [&] { return kcycles::mahonian_count(n, j); });
}

kc_status kc_expected_first_letter(int64_t n, int64_t m, int64_t k, char** out) {
  return string_result(out, [&] { return kcycles::expected_first_letter(n, m, k); });
}

kc_status kc_expected_first_letter_derangement_form(int64_t n, int64_t m, int64_t k, char** out) {
  return string_result(out, [&] { return kcycles::expected_first_letter_derangement_form(n, m, k); });
}

kc_status kc_expected_letter_at(int64_t n, int64_t m, int64_t k, int64_t i, char** out) {
  return string_result(out, [&] { return kcycles::expected_letter_at(n, m, k, i); });
}

kc_status kc_oracle_count(uint32_t n, uint32_t m, uint32_t k, uint32_t max_n, char** out) {
  return string_result(out, [&] { return kcycles::brute_count_kcycles(n, m, k, max_n); });
}

kc_status kc_oracle_expected_letter(uint32_t n, uint32_t m, uint32_t k, uint32_t i, uint32_t max_n,
                                    char** out) {
  return string_result(out, [&] { return kcycles::brute_expected_letter(n, m, k, i, max_n); });
}

kc_status kc_perm_parse_cycles(const char* text, kc_alphabet alphabet, kc_perm** out) {
  if (!text) return invalid("text");
  if (!out) return invalid("out");
  return guarded([&] { *out = new kc_perm{kcycles::parse_cycles(text, alphabet_of(alphabet))}; });
}

kc_status kc_perm_parse_one_line(const char* text, kc_perm** out) {
  if (!text) return invalid("text");
  if (!out) return invalid("out");
  return guarded([&] { *out = new kc_perm{kcycles::parse_one_line(text)}; });
}

kc_status kc_perm_parse_letter(const char* text, kc_alphabet alphabet, uint32_t* out) {
  if (!text) return invalid("text");
  if (!out) return invalid("out");
  return guarded([&] { *out = kcycles::parse_letter(text, alphabet_of(alphabet)); });
}

kc_status kc_render_letter(uint32_t x, kc_alphabet alphabet, char** out) {
  if (!out) return invalid("out");
  return guarded([&] { *out = dup(kcycles::render_letter(x, alphabet_of(alphabet))); });
}

kc_status kc_perm_format(const kc_perm* p, kc_alphabet alphabet, kc_order order, char** out) {
  if (!p) return invalid("permutation");
  if (!out) return invalid("out");
  return guarded([&] {
    const auto display = order == KC_ORDER_REVERSED ? kcycles::DisplayOrder::reversed : kcycles::DisplayOrder::paper;
    *out = dup(kcycles::format_cycles(p->value, alphabet_of(alphabet), display));
  });
}

kc_status kc_perm_size(const kc_perm* p, size_t* out) {
  if (!p) return invalid("permutation");
  if (!out) return invalid("out");
  *out = p->value.size();
  return KC_OK;
}

kc_status kc_perm_is_canonical(const kc_perm* p, int* out) {
  if (!p) return invalid("permutation");
  if (!out) return invalid("out");
  *out = p->value.is_canonical() ? 1 : 0;
  return KC_OK;
}

kc_status kc_perm_count_k_cycles(const kc_perm* p, uint32_t k, size_t* out) {
  if (!p) return invalid("permutation");
  if (!out) return invalid("out");
  return guarded([&] { *out = kcycles::count_k_cycles(p->value, k); });
}

kc_status kc_perm_letter_at(const kc_perm* p, uint32_t i, uint32_t* out) {
  if (!p) return invalid("permutation");
  if (!out) return invalid("out");
  return guarded([&] { *out = kcycles::letter_at(p->value, i); });
}

kc_status kc_perm_statistic(const kc_perm* p, const char* which, uint64_t* out) {
  if (!p) return invalid("permutation");
  if (!which) return invalid("which");
  if (!out) return invalid("out");
  return guarded([&] { *out = kcycles::statistic(p->value, kcycles::parse_statistic(which)); });
}

void kc_perm_free(kc_perm* p) { delete p; }

kc_status kc_insert(const kc_perm* p, uint32_t x, uint32_t k, int relabel, kc_perm** out,
                    int* preservation_guaranteed, kc_trace** trace) {
  if (!p) return invalid("permutation");
  if (!out) return invalid("out");
  return guarded([&] {
    kcycles::InsertionTrace steps;
    auto* sink = trace ? &steps : nullptr;
    kcycles::InsertResult result;
    if (relabel) {
      result = kcycles::insert(p->value, x, k, sink);
    } else {
      result.perm = kcycles::phi_core(p->value, x, k, sink);
      result.preservation_guaranteed = result.perm.size() % k != 0;
    }
    *out = new kc_perm{std::move(result.perm)};
    if (preservation_guaranteed) *preservation_guaranteed = result.preservation_guaranteed ? 1 : 0;
    if (trace) *trace = new kc_trace{std::move(steps)};
  });
}

kc_status kc_extract(const kc_perm* p, uint32_t k, int relabel, kc_perm** out, uint32_t* letter,
                     int* preservation_guaranteed, kc_trace** trace) {
  if (!p) return invalid("permutation");
  if (!out) return invalid("out");
  return guarded([&] {
    kcycles::InsertionTrace steps;
    auto* sink = trace ? &steps : nullptr;
    kcycles::ExtractResult result;
    if (relabel) {
      result = kcycles::extract(p->value, k, sink);
    } else {
      auto core = kcycles::psi_core(p->value, k, sink);
      result.perm = std::move(core.rest);
      result.letter = core.letter;
      result.preservation_guaranteed = p->value.size() % k != 0;
    }
    if (letter) *letter = result.letter;
    if (preservation_guaranteed) *preservation_guaranteed = result.preservation_guaranteed ? 1 : 0;
    *out = new kc_perm{std::move(result.perm)};
    if (trace) *trace = new kc_trace{std::move(steps)};
  });
}

kc_status kc_trace_size(const kc_trace* t, size_t* out) {
  if (!t) return invalid("trace");
  if (!out) return invalid("out");
  *out = t->value.steps.size();
  return KC_OK;
}

kc_status kc_trace_rule(const kc_trace* t, size_t i, const char** out) {
  if (!t) return invalid("trace");
  if (!out) return invalid("out");
  if (i >= t->value.steps.size()) {
    last_error = "trace step " + std::to_string(i) + " out of range";
    return KC_ERR_DOMAIN;
  }
  *out = kcycles::to_string(t->value.steps[i].rule);
  return KC_OK;
}

kc_status kc_trace_render(const kc_trace* t, kc_alphabet alphabet, char** out) {
  if (!t) return invalid("trace");
  if (!out) return invalid("out");
  return guarded([&] { *out = dup(kcycles::render_trace(t->value, alphabet_of(alphabet))); });
}

void kc_trace_free(kc_trace* t) { delete t; }

kc_status kc_table_create(int64_t k, int64_t n_max, kc_table** out) {
  if (!out) return invalid("out");
  return guarded([&] { *out = new kc_table{kcycles::expectation_table(k, n_max)}; });
}

kc_status kc_table_cell_count(const kc_table* t, size_t* out) {
  if (!t) return invalid("table");
  if (!out) return invalid("out");
  *out = t->value.cell_count();
  return KC_OK;
}

kc_status kc_table_get(const kc_table* t, int64_t n, int64_t m, char** out) {
  if (!t) return invalid("table");
  if (!out) return invalid("out");
  return guarded([&] {
    const auto value = t->value.at(n, m);
    if (!value) {
      kcycles::fail(kcycles::ErrorCode::empty_population,
                    "no cell n=" + std::to_string(n) + " m=" + std::to_string(m) + " in the table");
    }
    *out = dup(kcycles::to_string(*value));
  });
}

kc_status kc_table_render(const kc_table* t, kc_format format, kc_style style, char** out) {
  if (!t) return invalid("table");
  if (!out) return invalid("out");
  return guarded([&] {
    const auto s = style == KC_STYLE_FIGURE1 ? kcycles::RationalStyle::figure1 : kcycles::RationalStyle::reduced;
    *out = dup(kcycles::render_table(t->value, format_of(format), s));
  });
}

kc_status kc_table_parse(const char* text, kc_format format, kc_table** out) {
  if (!text) return invalid("text");
  if (!out) return invalid("out");
  return guarded([&] { *out = new kc_table{kcycles::parse_table(text, format_of(format))}; });
}

kc_status kc_table_equal(const kc_table* a, const kc_table* b, int* out) {
  if (!a || !b) return invalid("table");
  if (!out) return invalid("out");
  bool equal = a->value.k == b->value.k && a->value.rows.size() == b->value.rows.size();
  for (std::size_t r = 0; equal && r < a->value.rows.size(); ++r) {
    const auto& x = a->value.rows[r];
    const auto& y = b->value.rows[r];
    equal = x.n == y.n && x.cells.size() == y.cells.size();
    for (std::size_t c = 0; equal && c < x.cells.size(); ++c) {
      equal = x.cells[c].m == y.cells[c].m && x.cells[c].value == y.cells[c].value;
    }
  }
  *out = equal ? 1 : 0;
  return KC_OK;
}

void kc_table_free(kc_table* t) { delete t; }

void kc_budget_default(kc_budget* out) {
  if (!out) return;
  const kcycles::VerificationBudget d;
  *out = {d.max_n, d.max_gsg, d.max_bijection_n, d.max_kn_letter, d.max_kn_sum,
          d.closed_form_n, d.max_k, static_cast<uint32_t>(d.series_order)};
}

kc_status kc_verify(const kc_budget* budget, kc_report** out) {
  if (!out) return invalid("out");
  return guarded([&] {
    kcycles::VerificationBudget b;
    if (budget) {
      b.max_n = budget->max_n;
      b.max_gsg = budget->max_gsg;
      b.max_bijection_n = budget->max_bijection_n;
      b.max_kn_letter = budget->max_kn_letter;
      b.max_kn_sum = budget->max_kn_sum;
      b.closed_form_n = budget->closed_form_n;
      b.max_k = budget->max_k;
      b.series_order = budget->series_order;
    }
    *out = new kc_report{kcycles::verify_all(b)};
  });
}

kc_status kc_report_all_passed(const kc_report* r, int* out) {
  if (!r) return invalid("report");
  if (!out) return invalid("out");
  *out = r->value.all_passed() ? 1 : 0;
  return KC_OK;
}

kc_status kc_report_size(const kc_report* r, size_t* out) {
  if (!r) return invalid("report");
  if (!out) return invalid("out");
  *out = r->value.checks.size();
  return KC_OK;
}

kc_status kc_report_check(const kc_report* r, size_t i, const char** name, int* passed,
                          const char** counterexample) {
  if (!r) return invalid("report");
  if (i >= r->value.checks.size()) {
    last_error = "check " + std::to_string(i) + " out of range";
    return KC_ERR_DOMAIN;
  }
  const auto& check = r->value.checks[i];
  if (name) *name = check.name.c_str();
  if (passed) *passed = check.passed ? 1 : 0;
  if (counterexample) *counterexample = check.counterexample.c_str();
  return KC_OK;
}

kc_status kc_report_render(const kc_report* r, kc_format format, char** out) {
  if (!r) return invalid("report");
  if (!out) return invalid("out");
  return guarded([&] { *out = dup(format == KC_FORMAT_JSON ? r->value.to_json() : r->value.to_text()); });
}

void kc_report_free(kc_report* r) { delete r; }

kc_status kc_conjectures_check(uint32_t n_max, kc_family family, int64_t inv_max_value, kc_conjectures** out) {
  if (!out) return invalid("out");
  return guarded([&] {
    const auto f = family == KC_FAMILY_INV   ? kcycles::ConjectureFamily::inv
                   : family == KC_FAMILY_MAJ ? kcycles::ConjectureFamily::maj
                                             : kcycles::ConjectureFamily::both;
    *out = new kc_conjectures{kcycles::check_conjectures(n_max, f, inv_max_value)};
  });
}

kc_status kc_conjectures_counts(const kc_conjectures* c, int stated_range_only, size_t* matches,
                                size_t* mismatches) {
  if (!c) return invalid("conjectures");
  if (matches) *matches = c->value.matches(stated_range_only != 0);
  if (mismatches) *mismatches = c->value.mismatches(stated_range_only != 0);
  return KC_OK;
}

kc_status kc_conjectures_render(const kc_conjectures* c, kc_format format, char** out) {
  if (!c) return invalid("conjectures");
  if (!out) return invalid("out");
  return guarded([&] { *out = dup(kcycles::render_conjectures(c->value, format_of(format))); });
}

void kc_conjectures_free(kc_conjectures* c) { delete c; }

kc_status kc_oeis_cache_dir(const char* cache_dir, char** out) {
  if (!out) return invalid("out");
  return guarded([&] {
    std::optional<std::filesystem::path> explicit_dir;
    if (cache_dir && *cache_dir) explicit_dir = cache_dir;
    *out = dup(kcycles::resolve_oeis_cache_dir(explicit_dir).string());
  });
}

kc_status kc_oeis_match_denominators(const char* id, const char* cache_dir, int offline, int64_t k,
                                     int64_t n_max, kc_alignment* out, char** query, char** path) {
  if (!id) return invalid("id");
  if (!out) return invalid("out");
  return guarded([&] {
    std::optional<std::filesystem::path> explicit_dir;
    if (cache_dir && *cache_dir) explicit_dir = cache_dir;
    const auto dir = kcycles::resolve_oeis_cache_dir(explicit_dir);
    const auto sequence = kcycles::load_oeis_sequence(id, dir, offline != 0);
    const auto denominators = kcycles::table_denominators(k, n_max);
    const auto alignment = kcycles::align_prefix(denominators, sequence.terms);
    out->offset = alignment.offset;
    out->matched = alignment.matched;
    out->query_terms = denominators.size();
    out->aligned = alignment.aligned ? 1 : 0;
    out->from_cache = sequence.source == kcycles::OeisSource::cache ? 1 : 0;
    std::string text;
    for (std::size_t i = 0; i < denominators.size(); ++i) {
      if (i) text += ", ";
      text += denominators[i].get_str();
    }
    char* query_copy = query ? dup(text) : nullptr;
    if (path) *path = dup(sequence.path.string());
    if (query) *query = query_copy;
  });
}

}  // extern "C"
