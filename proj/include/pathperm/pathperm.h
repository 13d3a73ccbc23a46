/* C interface to libpathperm.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every call that can fail returns a pp_status; on failure the message is
 * available from pp_last_error() (thread-local, valid until the next failing
 * call on the same thread). Strings returned through char** out-parameters
 * are owned by the caller and released with pp_string_free().
 *
 * Patterns are given as text: "312", "321", or any length-3 permutation such
 * as "231" where a function accepts general patterns. Large integers travel
 * as decimal strings. Reports are JSON documents; see docs/json.md.
 */
#ifndef PATHPERM_H
#define PATHPERM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PATHPERM_BUILDING)
#    define PP_API __declspec(dllexport)
#  else
#    define PP_API __declspec(dllimport)
#  endif
#else
#  define PP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pp_status {
  PP_OK = 0,
  PP_INVALID_INPUT = 1,
  PP_UNSUPPORTED_PATTERN = 2,
  PP_UNSUPPORTED_INPUT = 3,
  PP_NOT_IN_IMAGE = 4,
  PP_RESOURCE_GUARD = 5,
  PP_CACHE_CORRUPT = 6,
  PP_IO = 7,
  PP_NULL_ARGUMENT = 8,
  PP_INTERNAL = 9
} pp_status;

typedef struct pp_perm pp_perm;
typedef struct pp_path pp_path;
typedef struct pp_table pp_table;

typedef struct pp_options {
  unsigned workers;       /* >= 1 */
  size_t limit;           /* largest n accepted unless allow_large */
  int allow_large;        /* nonzero lifts the limit to 12 */
  const char* cache_dir;  /* NULL disables the table cache */
} pp_options;

PP_API const char* pp_version(void);
PP_API const char* pp_status_name(pp_status status);
PP_API const char* pp_last_error(void);
PP_API void pp_string_free(char* s);
PP_API void pp_options_default(pp_options* options);

/* permutations */
PP_API pp_status pp_perm_parse(const char* text, pp_perm** out);
PP_API pp_status pp_perm_from_values(const int* values, size_t n, pp_perm** out);
PP_API void pp_perm_free(pp_perm* p);
PP_API size_t pp_perm_size(const pp_perm* p);
/* value at 1-based position i, 0 when out of range */
PP_API int pp_perm_at(const pp_perm* p, size_t i);
PP_API pp_status pp_perm_to_string(const pp_perm* p, char** out);
PP_API pp_status pp_count_occurrences(const pp_perm* p, const char* pattern, uint64_t* out);
PP_API pp_status pp_tau_base(const pp_perm* p, const char* pattern, pp_perm** out);
/* heights under the 312 or 321 encoder; out must hold pp_perm_size(p) ints */
PP_API pp_status pp_heights(const pp_perm* p, const char* pattern, int* out);

/* lattice paths */
PP_API pp_status pp_path_parse(const char* text, pp_path** out);
PP_API void pp_path_free(pp_path* path);
PP_API pp_status pp_path_to_string(const pp_path* path, char** out);
/* kind: 0 Dyck, 1 Dyck with jumps, 2 invalid (reason set, may be NULL) */
PP_API pp_status pp_path_classify(const pp_path* path, int* kind, char** reason);
PP_API pp_status pp_path_render(const pp_path* path, int svg, char** out);
PP_API pp_status pp_count_paths(size_t n, size_t s, char** decimal);

/* bijections; mode "312", "321" or "avoiding" */
PP_API pp_status pp_map(const pp_perm* p, const char* mode, pp_path** out);
/* mode "312avoid", "321avoid", "psi312" or "psi321" (exhaustive search, n <= 10) */
PP_API pp_status pp_decode(const pp_path* path, const char* mode, pp_perm** out);
PP_API pp_status pp_analyze_jumps_json(const pp_perm* p, const char* pattern, char** json);

/* exhaustive enumeration */
PP_API pp_status pp_table_compute(size_t n, const char* pattern, const pp_options* options,
                                  pp_table** out);
PP_API void pp_table_free(pp_table* table);
PP_API size_t pp_table_n(const pp_table* table);
/* number of stored counts (largest r with a nonzero count, plus one) */
PP_API size_t pp_table_width(const pp_table* table);
PP_API uint64_t pp_table_count(const pp_table* table, size_t r);
PP_API uint64_t pp_table_total(const pp_table* table);
PP_API pp_status pp_table_json(const pp_table* table, char** json);

PP_API pp_status pp_class_json(size_t n, const char* pattern, size_t r, const pp_options* options,
                               char** json);
PP_API pp_status pp_bases_json(const char* pattern, int r, const pp_options* options, char** json);

/* verification reports; *pass is set to 1 when every check holds */
PP_API pp_status pp_audit_json(size_t n, const char* pattern, const pp_options* options,
                               char** json, int* pass);
PP_API pp_status pp_verify_formulas_json(size_t n_max, const pp_options* options, char** json,
                                         int* pass);
PP_API pp_status pp_verify_conjectures_json(size_t n_max, const pp_options* options, char** json,
                                            int* pass);
PP_API pp_status pp_verify_assemblies_json(size_t order, char** json, int* pass);
PP_API pp_status pp_verify_general_form_json(size_t order, char** json, int* pass);

/* generating functions and closed counts */
PP_API pp_status pp_gf_coefficients_json(const char* pattern, int r, size_t n_max, char** json);
PP_API pp_status pp_closed_form_count(const char* pattern, int r, size_t n, char** decimal);

#ifdef __cplusplus
}
#endif

#endif
