#include <doctest.h>

#include <cstring>
#include <string>

#include "kcycles/kcycles.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  kc_string_free(s);
  return out;
}

}  // namespace

TEST_SUITE("c_api") {
  TEST_CASE("counts and expectations") {
    char* s = nullptr;
    REQUIRE(kc_count(4, 0, 2, &s) == KC_OK);
    CHECK(take(s) == "15");
    REQUIRE(kc_count_recursive(9, 3, 3, &s) == KC_OK);
    const auto recursive = take(s);
    REQUIRE(kc_count(9, 3, 3, &s) == KC_OK);
    CHECK(take(s) == recursive);
    REQUIRE(kc_count_difference(4, 1, 2, &s) == KC_OK);
    CHECK(take(s) == "-6");
    REQUIRE(kc_count_first_letter(4, 0, 2, 3, &s) == KC_OK);
    CHECK(take(s) == "4");
    REQUIRE(kc_derangements(2, 6, &s) == KC_OK);
    CHECK(take(s) == "27949");
    REQUIRE(kc_gsg_fixed_point_count(2, 2, 1, &s) == KC_OK);
    CHECK(take(s) == "2");
    REQUIRE(kc_mahonian_count(4, 2, &s) == KC_OK);
    CHECK(take(s) == "5");
    REQUIRE(kc_expected_first_letter(12, 0, 2, &s) == KC_OK);
    CHECK(take(s) == "181669/27949");
    REQUIRE(kc_expected_first_letter_derangement_form(2, 0, 2, &s) == KC_OK);
    CHECK(take(s) == "13/5");
    REQUIRE(kc_expected_letter_at(2, 0, 2, 4, &s) == KC_OK);
    CHECK(take(s) == "12/5");
    REQUIRE(kc_oracle_count(4, 2, 2, 9, &s) == KC_OK);
    CHECK(take(s) == "3");
    REQUIRE(kc_oracle_expected_letter(5, 1, 3, 2, 9, &s) == KC_OK);
    CHECK(take(s) == "3");
  }

  TEST_CASE("errors") {
    char* s = nullptr;
    CHECK(kc_expected_first_letter(4, 3, 2, &s) == KC_ERR_EMPTY_POPULATION);
    CHECK(s == nullptr);
    CHECK(std::strlen(kc_last_error()) > 0);
    CHECK(kc_count_first_letter(4, 0, 1, 2, &s) == KC_ERR_UNSUPPORTED);
    CHECK(kc_oracle_count(12, 0, 2, 9, &s) == KC_ERR_RESOURCE);
    CHECK(kc_count(4, 0, 2, nullptr) == KC_ERR_INVALID_ARGUMENT);
    kc_perm* p = nullptr;
    CHECK(kc_perm_parse_cycles("(12", KC_ALPHABET_DECIMAL, &p) == KC_ERR_MALFORMED_INPUT);
    CHECK(p == nullptr);
    CHECK(std::string(kc_status_name(KC_ERR_NETWORK)) == "network error");
  }

  TEST_CASE("permutations") {
    kc_perm* p = nullptr;
    REQUIRE(kc_perm_parse_one_line("2143", &p) == KC_OK);
    char* s = nullptr;
    REQUIRE(kc_perm_format(p, KC_ALPHABET_DECIMAL, KC_ORDER_REVERSED, &s) == KC_OK);
    CHECK(take(s) == "(43)(21)");
    size_t count = 0;
    REQUIRE(kc_perm_count_k_cycles(p, 2, &count) == KC_OK);
    CHECK(count == 2);
    uint32_t image = 0;
    REQUIRE(kc_perm_letter_at(p, 1, &image) == KC_OK);
    CHECK(image == 2);
    CHECK(kc_perm_letter_at(p, 9, &image) == KC_ERR_DOMAIN);
    uint64_t inv = 0;
    REQUIRE(kc_perm_statistic(p, "inv", &inv) == KC_OK);
    CHECK(inv == 2);
    int canonical = 0;
    REQUIRE(kc_perm_is_canonical(p, &canonical) == KC_OK);
    CHECK(canonical == 1);
    kc_perm_free(p);

    uint32_t letter = 0;
    REQUIRE(kc_perm_parse_letter("N", KC_ALPHABET_BASE36, &letter) == KC_OK);
    CHECK(letter == 23);
    REQUIRE(kc_render_letter(18, KC_ALPHABET_BASE36, &s) == KC_OK);
    CHECK(take(s) == "I");
  }

  TEST_CASE("bijection round trip") {
    kc_perm* p = nullptr;
    REQUIRE(kc_perm_parse_cycles("(D76)(E)(F32)(G91C)(K54)(LJ8)(MB)(NAH)", KC_ALPHABET_BASE36, &p) == KC_OK);
    kc_perm* out = nullptr;
    kc_trace* trace = nullptr;
    int guaranteed = -1;
    REQUIRE(kc_insert(p, 18, 3, 0, &out, &guaranteed, &trace) == KC_OK);
    char* s = nullptr;
    REQUIRE(kc_perm_format(out, KC_ALPHABET_BASE36, KC_ORDER_PAPER, &s) == KC_OK);
    CHECK(take(s) == "(D76)(E3)(F29)(G1)(KC5)(L4J)(M8BA)(NHI)");
    size_t steps = 0;
    REQUIRE(kc_trace_size(trace, &steps) == KC_OK);
    CHECK(steps == 7);
    const char* rule = nullptr;
    REQUIRE(kc_trace_rule(trace, 0, &rule) == KC_OK);
    CHECK(std::string(rule) == "phi_b");
    CHECK(kc_trace_rule(trace, 7, &rule) == KC_ERR_DOMAIN);
    REQUIRE(kc_trace_render(trace, KC_ALPHABET_BASE36, &s) == KC_OK);
    CHECK(take(s).find("phi_d: (E) <- 3") != std::string::npos);

    kc_perm* back = nullptr;
    uint32_t letter = 0;
    REQUIRE(kc_extract(out, 3, 0, &back, &letter, nullptr, nullptr) == KC_OK);
    CHECK(letter == 18);
    REQUIRE(kc_perm_format(back, KC_ALPHABET_BASE36, KC_ORDER_PAPER, &s) == KC_OK);
    CHECK(take(s) == "(D76)(E)(F32)(G91C)(K54)(LJ8)(MB)(NAH)");
    kc_perm_free(back);
    kc_trace_free(trace);
    kc_perm_free(out);
    kc_perm_free(p);

    kc_perm* one = nullptr;
    REQUIRE(kc_perm_parse_cycles("(1)", KC_ALPHABET_DECIMAL, &one) == KC_OK);
    REQUIRE(kc_insert(one, 2, 2, 1, &out, &guaranteed, nullptr) == KC_OK);
    CHECK(guaranteed == 0);
    REQUIRE(kc_perm_format(out, KC_ALPHABET_DECIMAL, KC_ORDER_PAPER, &s) == KC_OK);
    CHECK(take(s) == "(1)(2)");
    kc_perm_free(out);
    kc_perm_free(one);
  }

  TEST_CASE("tables") {
    kc_table* t = nullptr;
    REQUIRE(kc_table_create(2, 13, &t) == KC_OK);
    size_t cells = 0;
    REQUIRE(kc_table_cell_count(t, &cells) == KC_OK);
    CHECK(cells == 55);
    char* s = nullptr;
    REQUIRE(kc_table_get(t, 12, 3, &s) == KC_OK);
    CHECK(take(s) == "188/29");
    CHECK(kc_table_get(t, 4, 3, &s) == KC_ERR_EMPTY_POPULATION);
    REQUIRE(kc_table_render(t, KC_FORMAT_MARKDOWN, KC_STYLE_FIGURE1, &s) == KC_OK);
    const auto markdown = take(s);
    CHECK(markdown.find("| 9 | 5/1 | 5/1 | 5/1 | 5/1 | 5/1 |") != std::string::npos);
    kc_table* back = nullptr;
    REQUIRE(kc_table_parse(markdown.c_str(), KC_FORMAT_MARKDOWN, &back) == KC_OK);
    int equal = 0;
    REQUIRE(kc_table_equal(t, back, &equal) == KC_OK);
    CHECK(equal == 1);
    kc_table_free(back);
    kc_table_free(t);
  }

  TEST_CASE("verification and conjectures") {
    kc_budget budget;
    kc_budget_default(&budget);
    CHECK(budget.max_n == 8);
    budget.max_n = 4;
    budget.max_bijection_n = 4;
    budget.max_kn_letter = 4;
    kc_report* r = nullptr;
    REQUIRE(kc_verify(&budget, &r) == KC_OK);
    int passed = 0;
    REQUIRE(kc_report_all_passed(r, &passed) == KC_OK);
    CHECK(passed == 1);
    size_t n = 0;
    REQUIRE(kc_report_size(r, &n) == KC_OK);
    CHECK(n > 20);
    const char* name = nullptr;
    REQUIRE(kc_report_check(r, 0, &name, &passed, nullptr) == KC_OK);
    CHECK(std::strlen(name) > 0);
    char* s = nullptr;
    REQUIRE(kc_report_render(r, KC_FORMAT_JSON, &s) == KC_OK);
    CHECK(take(s).find("\"all_passed\": true") != std::string::npos);
    kc_report_free(r);

    kc_conjectures* c = nullptr;
    REQUIRE(kc_conjectures_check(6, KC_FAMILY_BOTH, 10, &c) == KC_OK);
    size_t matches = 0;
    size_t mismatches = 1;
    REQUIRE(kc_conjectures_counts(c, 1, &matches, &mismatches) == KC_OK);
    CHECK(matches > 0);
    CHECK(mismatches == 0);
    REQUIRE(kc_conjectures_render(c, KC_FORMAT_CSV, &s) == KC_OK);
    CHECK(take(s).rfind("conjecture,n,value", 0) == 0);
    kc_conjectures_free(c);
  }

  TEST_CASE("oeis") {
    kc_alignment a{};
    char* query = nullptr;
    char* path = nullptr;
    REQUIRE(kc_oeis_match_denominators("A000354", KCYCLES_DATA_DIR "/oeis", 1, 2, 12, &a, &query, &path) == KC_OK);
    CHECK(a.aligned == 1);
    CHECK(a.matched == 6);
    CHECK(a.offset == 1);
    CHECK(a.from_cache == 1);
    CHECK(take(query) == "1, 5, 29, 233, 2329, 27949");
    CHECK(take(path).find("b000354.txt") != std::string::npos);
    CHECK(kc_oeis_match_denominators("A000354", "/nonexistent/kcycles", 1, 2, 12, &a, nullptr, nullptr) ==
          KC_ERR_NETWORK);
    CHECK(std::string(kc_last_error()).find("/nonexistent/kcycles/b000354.txt") != std::string::npos);
    char* dir = nullptr;
    REQUIRE(kc_oeis_cache_dir("/x", &dir) == KC_OK);
    CHECK(take(dir) == "/x");
  }
}
