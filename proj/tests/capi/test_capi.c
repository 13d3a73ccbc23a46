/* Exercises the C interface from plain C. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "pathperm/pathperm.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond);  \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static int contains(const char* hay, const char* needle) { return hay && strstr(hay, needle) != NULL; }

static void test_permutations(void) {
  pp_perm* p = NULL;
  char* s = NULL;
  uint64_t n = 0;
  int h[5];

  EXPECT(pp_perm_parse("4,3,5,1,2", &p) == PP_OK);
  EXPECT(pp_perm_size(p) == 5);
  EXPECT(pp_perm_at(p, 3) == 5);
  EXPECT(pp_perm_at(p, 0) == 0);
  EXPECT(pp_perm_at(p, 6) == 0);
  EXPECT(pp_perm_to_string(p, &s) == PP_OK && strcmp(s, "4,3,5,1,2") == 0);
  pp_string_free(s);

  EXPECT(pp_count_occurrences(p, "321", &n) == PP_OK && n == 2);
  EXPECT(pp_count_occurrences(p, "312", &n) == PP_OK && n == 3);
  EXPECT(pp_count_occurrences(p, "231", &n) == PP_OK);
  EXPECT(pp_count_occurrences(p, "12x", &n) == PP_UNSUPPORTED_PATTERN);

  EXPECT(pp_heights(p, "321", h) == PP_OK);
  EXPECT(h[0] == 3 && h[1] == 0 && h[2] == 2 && h[3] == 1 && h[4] == 0);
  EXPECT(pp_heights(p, "312", h) == PP_OK);
  EXPECT(h[0] == 3 && h[1] == 2 && h[2] == 2 && h[3] == 0 && h[4] == 0);
  pp_perm_free(p);

  {
    const int values[] = {1, 5, 2, 4, 3};
    pp_perm* base = NULL;
    EXPECT(pp_perm_from_values(values, 5, &p) == PP_OK);
    EXPECT(pp_tau_base(p, "312", &base) == PP_OK);
    EXPECT(pp_perm_to_string(base, &s) == PP_OK && strcmp(s, "4,1,3,2") == 0);
    pp_string_free(s);
    pp_perm_free(base);
    pp_perm_free(p);
  }

  p = NULL;
  EXPECT(pp_perm_parse("1,1,2", &p) == PP_INVALID_INPUT);
  EXPECT(p == NULL);
  EXPECT(strlen(pp_last_error()) > 0);
  EXPECT(pp_perm_parse(NULL, &p) == PP_NULL_ARGUMENT);
  EXPECT(strcmp(pp_status_name(PP_RESOURCE_GUARD), pp_status_name(PP_OK)) != 0);
}

static void test_paths(void) {
  pp_path* path = NULL;
  pp_perm* p = NULL;
  char* s = NULL;
  char* reason = NULL;
  int kind = -1;

  EXPECT(pp_path_parse("UDDU", &path) == PP_OK);
  EXPECT(pp_path_classify(path, &kind, &reason) == PP_OK);
  EXPECT(kind == 2);
  EXPECT(reason && strcmp(reason, "height -1 after prefix 3") == 0);
  pp_string_free(reason);
  pp_path_free(path);

  EXPECT(pp_path_parse("UUDD", &path) == PP_OK);
  EXPECT(pp_path_classify(path, &kind, NULL) == PP_OK && kind == 0);
  EXPECT(pp_decode(path, "321avoid", &p) == PP_OK);
  EXPECT(pp_perm_to_string(p, &s) == PP_OK && strcmp(s, "2,1") == 0);
  pp_string_free(s);
  pp_perm_free(p);
  EXPECT(pp_path_render(path, 1, &s) == PP_OK && contains(s, "<svg"));
  pp_string_free(s);
  EXPECT(pp_decode(path, "nonsense", &p) == PP_INVALID_INPUT);
  pp_path_free(path);

  EXPECT(pp_path_parse("UUJDUD", &path) == PP_OK);
  EXPECT(pp_decode(path, "psi312", &p) == PP_NOT_IN_IMAGE);
  pp_path_free(path);

  EXPECT(pp_path_parse("UXD", &path) == PP_INVALID_INPUT);

  EXPECT(pp_count_paths(10, 0, &s) == PP_OK && strcmp(s, "16796") == 0);
  pp_string_free(s);
}

static void test_maps(void) {
  pp_perm* p = NULL;
  pp_path* path = NULL;
  char* s = NULL;

  EXPECT(pp_perm_parse("4,3,5,1,2", &p) == PP_OK);
  EXPECT(pp_map(p, "321", &path) == PP_OK);
  EXPECT(pp_path_to_string(path, &s) == PP_OK && strcmp(s, "UUUUDJJDUUUDDD") == 0);
  pp_string_free(s);
  pp_path_free(path);
  EXPECT(pp_map(p, "312", &path) == PP_OK);
  EXPECT(pp_path_to_string(path, &s) == PP_OK && strcmp(s, "UUUUDDUDJDUD") == 0);
  pp_string_free(s);
  {
    pp_perm* back = NULL;
    EXPECT(pp_decode(path, "psi312", &back) == PP_OK);
    EXPECT(pp_perm_to_string(back, &s) == PP_OK && strcmp(s, "4,3,5,1,2") == 0);
    pp_string_free(s);
    pp_perm_free(back);
  }
  pp_path_free(path);
  EXPECT(pp_analyze_jumps_json(p, "321", &s) == PP_OK && contains(s, "\"depth\""));
  pp_string_free(s);
  pp_perm_free(p);
}

static void test_tables(void) {
  pp_options opts;
  pp_table* t = NULL;
  char* s = NULL;
  int pass = 0;

  pp_options_default(&opts);
  EXPECT(opts.workers >= 1 && opts.limit == 10 && opts.cache_dir == NULL);

  EXPECT(pp_table_compute(5, "312", &opts, &t) == PP_OK);
  EXPECT(pp_table_n(t) == 5);
  EXPECT(pp_table_width(t) == 7);
  EXPECT(pp_table_count(t, 0) == 42 && pp_table_count(t, 1) == 21 && pp_table_count(t, 2) == 23);
  EXPECT(pp_table_count(t, 100) == 0);
  EXPECT(pp_table_total(t) == 120);
  EXPECT(pp_table_json(t, &s) == PP_OK && contains(s, "\"total\""));
  pp_string_free(s);
  pp_table_free(t);

  EXPECT(pp_table_compute(11, "321", &opts, &t) == PP_RESOURCE_GUARD);
  EXPECT(pp_table_compute(5, "21", &opts, &t) == PP_UNSUPPORTED_PATTERN);
  EXPECT(pp_table_compute(5, "312", NULL, &t) == PP_OK);  /* NULL options mean defaults */
  pp_table_free(t);

  EXPECT(pp_bases_json("312", 2, &opts, &s) == PP_OK && contains(s, "\"3,1,6,4,5,2\""));
  pp_string_free(s);
  EXPECT(pp_class_json(4, "321", 1, &opts, &s) == PP_OK && contains(s, "\"members\""));
  pp_string_free(s);

  EXPECT(pp_audit_json(5, "321", &opts, &s, &pass) == PP_OK && pass == 1);
  pp_string_free(s);
  EXPECT(pp_verify_formulas_json(6, &opts, &s, &pass) == PP_OK && pass == 1);
  pp_string_free(s);
  EXPECT(pp_verify_conjectures_json(6, &opts, &s, &pass) == PP_OK && pass == 1);
  pp_string_free(s);
  EXPECT(pp_verify_assemblies_json(20, &s, &pass) == PP_OK && pass == 1);
  pp_string_free(s);
  EXPECT(pp_verify_general_form_json(60, &s, &pass) == PP_OK && pass == 1);
  pp_string_free(s);
}

static void test_series(void) {
  char* s = NULL;
  EXPECT(pp_closed_form_count("321", 2, 12, &s) == PP_OK && strcmp(s, "783750") == 0);
  pp_string_free(s);
  EXPECT(pp_closed_form_count("312", 1, 12, &s) == PP_OK && strcmp(s, "293930") == 0);
  pp_string_free(s);
  EXPECT(pp_closed_form_count("321", 3, 5, &s) == PP_UNSUPPORTED_INPUT);
  EXPECT(pp_gf_coefficients_json("321", 3, 8, &s) == PP_OK && contains(s, "\"conjecture\":true"));
  pp_string_free(s);
}

int main(void) {
  printf("libpathperm %s\n", pp_version());
  test_permutations();
  test_paths();
  test_maps();
  test_tables();
  test_series();
  if (failures) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return 1;
  }
  puts("all C API checks passed");
  return 0;
}
