#ifndef KCYCLES_KCYCLES_H
#define KCYCLES_KCYCLES_H

/*
 * C interface to the kcycles library. Exact values cross the boundary as
 * decimal strings ("181669/27949"); strings returned through char** out
 * parameters are heap allocated and must be released with kc_string_free.
 * Every function returning kc_status records a message for the calling
 * thread, readable with kc_last_error until the next failing call.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define KC_API __declspec(dllexport)
#else
#define KC_API __attribute__((visibility("default")))
#endif

typedef enum kc_status {
  KC_OK = 0,
  KC_ERR_MALFORMED_INPUT = 1,
  KC_ERR_DOMAIN = 2,
  KC_ERR_EMPTY_POPULATION = 3,
  KC_ERR_UNSUPPORTED = 4,
  KC_ERR_RESOURCE = 5,
  KC_ERR_INTERNAL = 6,
  KC_ERR_RENDER = 7,
  KC_ERR_NETWORK = 8,
  KC_ERR_INVALID_ARGUMENT = 9 /* null handle or out pointer */
} kc_status;

typedef enum kc_alphabet { KC_ALPHABET_DECIMAL = 0, KC_ALPHABET_BASE36 = 1 } kc_alphabet;
typedef enum kc_order { KC_ORDER_PAPER = 0, KC_ORDER_REVERSED = 1 } kc_order;
typedef enum kc_format { KC_FORMAT_PLAIN = 0, KC_FORMAT_MARKDOWN = 1, KC_FORMAT_CSV = 2, KC_FORMAT_JSON = 3 } kc_format;
typedef enum kc_style { KC_STYLE_REDUCED = 0, KC_STYLE_FIGURE1 = 1 } kc_style;
typedef enum kc_family { KC_FAMILY_INV = 0, KC_FAMILY_MAJ = 1, KC_FAMILY_BOTH = 2 } kc_family;

KC_API const char* kc_last_error(void);
KC_API const char* kc_status_name(kc_status status);
KC_API void kc_string_free(char* s);
KC_API const char* kc_version(void);

/* Counts and expectations. */
KC_API kc_status kc_count(int64_t n, int64_t m, int64_t k, char** out);
KC_API kc_status kc_count_recursive(int64_t n, int64_t m, int64_t k, char** out);
KC_API kc_status kc_count_difference(int64_t n, int64_t m, int64_t k, char** out);
KC_API kc_status kc_count_first_letter(int64_t n, int64_t m, int64_t k, int64_t a, char** out);
KC_API kc_status kc_derangements(int64_t k, int64_t n, char** out);
KC_API kc_status kc_gsg_fixed_point_count(int64_t k, int64_t n, int64_t m, char** out);
KC_API kc_status kc_mahonian_count(int64_t n, int64_t j, char** out);
KC_API kc_status kc_expected_first_letter(int64_t n, int64_t m, int64_t k, char** out);
/* n is the group index: the population is permutations of k*n letters. */
KC_API kc_status kc_expected_first_letter_derangement_form(int64_t n, int64_t m, int64_t k, char** out);
KC_API kc_status kc_expected_letter_at(int64_t n, int64_t m, int64_t k, int64_t i, char** out);
/* Enumeration of S_n; n must not exceed max_n. */
KC_API kc_status kc_oracle_count(uint32_t n, uint32_t m, uint32_t k, uint32_t max_n, char** out);
KC_API kc_status kc_oracle_expected_letter(uint32_t n, uint32_t m, uint32_t k, uint32_t i, uint32_t max_n,
                                           char** out);

/* Permutations. */
typedef struct kc_perm kc_perm;

KC_API kc_status kc_perm_parse_cycles(const char* text, kc_alphabet alphabet, kc_perm** out);
KC_API kc_status kc_perm_parse_one_line(const char* text, kc_perm** out);
KC_API kc_status kc_perm_parse_letter(const char* text, kc_alphabet alphabet, uint32_t* out);
KC_API kc_status kc_render_letter(uint32_t x, kc_alphabet alphabet, char** out);
KC_API kc_status kc_perm_format(const kc_perm* p, kc_alphabet alphabet, kc_order order, char** out);
KC_API kc_status kc_perm_size(const kc_perm* p, size_t* out);
KC_API kc_status kc_perm_is_canonical(const kc_perm* p, int* out);
KC_API kc_status kc_perm_count_k_cycles(const kc_perm* p, uint32_t k, size_t* out);
KC_API kc_status kc_perm_letter_at(const kc_perm* p, uint32_t i, uint32_t* out);
/* which: "inv", "maj", "des" or "fixed_points". */
KC_API kc_status kc_perm_statistic(const kc_perm* p, const char* which, uint64_t* out);
KC_API void kc_perm_free(kc_perm* p);

/* Insertion bijection. relabel = 0 applies the core maps to the letters as
 * given; otherwise letters are shifted so the result lives on 1..n. */
typedef struct kc_trace kc_trace;

KC_API kc_status kc_insert(const kc_perm* p, uint32_t x, uint32_t k, int relabel, kc_perm** out,
                           int* preservation_guaranteed, kc_trace** trace);
KC_API kc_status kc_extract(const kc_perm* p, uint32_t k, int relabel, kc_perm** out, uint32_t* letter,
                            int* preservation_guaranteed, kc_trace** trace);
KC_API kc_status kc_trace_size(const kc_trace* t, size_t* out);
/* Rule name of step i, e.g. "phi_b"; the pointer is static. */
KC_API kc_status kc_trace_rule(const kc_trace* t, size_t i, const char** out);
KC_API kc_status kc_trace_render(const kc_trace* t, kc_alphabet alphabet, char** out);
KC_API void kc_trace_free(kc_trace* t);

/* Expectation tables. */
typedef struct kc_table kc_table;

KC_API kc_status kc_table_create(int64_t k, int64_t n_max, kc_table** out);
KC_API kc_status kc_table_cell_count(const kc_table* t, size_t* out);
/* KC_ERR_EMPTY_POPULATION when the cell is not populated. */
KC_API kc_status kc_table_get(const kc_table* t, int64_t n, int64_t m, char** out);
KC_API kc_status kc_table_render(const kc_table* t, kc_format format, kc_style style, char** out);
/* Reads a markdown, csv or json rendering back into a table. */
KC_API kc_status kc_table_parse(const char* text, kc_format format, kc_table** out);
KC_API kc_status kc_table_equal(const kc_table* a, const kc_table* b, int* out);
KC_API void kc_table_free(kc_table* t);

/* Verification against enumeration oracles. */
typedef struct kc_budget {
  uint32_t max_n;
  uint64_t max_gsg;
  uint32_t max_bijection_n;
  uint32_t max_kn_letter;
  uint32_t max_kn_sum;
  uint32_t closed_form_n;
  uint32_t max_k;
  uint32_t series_order;
} kc_budget;

typedef struct kc_report kc_report;

KC_API void kc_budget_default(kc_budget* out);
KC_API kc_status kc_verify(const kc_budget* budget, kc_report** out);
KC_API kc_status kc_report_all_passed(const kc_report* r, int* out);
KC_API kc_status kc_report_size(const kc_report* r, size_t* out);
/* name and counterexample stay valid while the report lives. */
KC_API kc_status kc_report_check(const kc_report* r, size_t i, const char** name, int* passed,
                                 const char** counterexample);
/* KC_FORMAT_JSON gives json, anything else the text report. */
KC_API kc_status kc_report_render(const kc_report* r, kc_format format, char** out);
KC_API void kc_report_free(kc_report* r);

/* Mahonian conjecture checks. */
typedef struct kc_conjectures kc_conjectures;

KC_API kc_status kc_conjectures_check(uint32_t n_max, kc_family family, int64_t inv_max_value,
                                      kc_conjectures** out);
KC_API kc_status kc_conjectures_counts(const kc_conjectures* c, int stated_range_only, size_t* matches,
                                       size_t* mismatches);
KC_API kc_status kc_conjectures_render(const kc_conjectures* c, kc_format format, char** out);
KC_API void kc_conjectures_free(kc_conjectures* c);

/* OEIS cross-reference. cache_dir may be NULL to use the default lookup. */
typedef struct kc_alignment {
  int64_t offset;      /* b-file index of the first matched term */
  size_t matched;      /* matched prefix length */
  size_t query_terms;
  int aligned;
  int from_cache;
} kc_alignment;

KC_API kc_status kc_oeis_cache_dir(const char* cache_dir, char** out);
/* query receives the comma separated denominators and path the b-file
 * location; both are optional. */
KC_API kc_status kc_oeis_match_denominators(const char* id, const char* cache_dir, int offline, int64_t k,
                                            int64_t n_max, kc_alignment* out, char** query, char** path);

#ifdef __cplusplus
}
#endif

#endif
