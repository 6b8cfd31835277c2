/* SPDX-License-Identifier: Apache-2.0 */
#ifndef EULERTOWER_H
#define EULERTOWER_H

#include <stddef.h>
#include <stdint.h>

#if defined(ET_BUILDING_LIBRARY)
#define ET_API __attribute__((visibility("default")))
#else
#define ET_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum et_status {
  ET_OK = 0,
  ET_INPUT_ERROR = 1,
  ET_INTERNAL_ERROR = 2
} et_status;

typedef enum et_format {
  ET_FORMAT_TEXT = 0,
  ET_FORMAT_STRUCTURED = 1
} et_format;

typedef struct et_complex et_complex;
typedef struct et_simplicial et_simplicial;
typedef struct et_space et_space;
typedef struct et_k0_complex et_k0_complex;
typedef struct et_variety et_variety;
typedef struct et_category et_category;
typedef struct et_report et_report;

/* Message for the most recent failure on the calling thread. Valid until the
 * next call into the library from that thread. */
ET_API const char* et_last_error(void);

/* Strings returned through `char**` out-parameters. */
ET_API void et_string_free(char* s);

/* Reports. */
ET_API const char* et_report_render(const et_report* r, et_format format);
ET_API void et_report_free(et_report* r);

/* Chain complexes in the line format (range, ranks, d blocks). */
ET_API et_status et_complex_parse(const char* text, et_complex** out);
ET_API et_status et_complex_serialize(const et_complex* c, char** out);
/* max_j < 0 selects the default range. */
ET_API et_status et_complex_report(const et_complex* c, int max_j, et_report** out);
ET_API void et_complex_free(et_complex* c);

/* Simplicial complexes: one facet per line. */
ET_API et_status et_simplicial_parse(const char* text, et_simplicial** out);
ET_API et_status et_simplicial_serialize(const et_simplicial* k, char** out);
ET_API et_status et_simplicial_report(const et_simplicial* k, et_report** out);
ET_API void et_simplicial_free(et_simplicial* k);

/* Space expressions such as "S(2) * T(1) + pt". */
ET_API et_status et_space_parse(const char* text, et_space** out);
/* kervaire_dim < 0 skips the semi-characteristic. */
ET_API et_status et_space_report(const et_space* s, long kervaire_dim, int torus_order,
                                 et_report** out);
ET_API void et_space_free(et_space* s);

/* K0 complexes: "degree: combination" lines. */
ET_API et_status et_k0_parse(const char* text, et_k0_complex** out);
ET_API et_status et_k0_serialize(const et_k0_complex* m, char** out);
/* rank_map may be NULL; otherwise "g=1,h=2". max_j < 0 selects the default. */
ET_API et_status et_k0_report(const et_k0_complex* m, const char* rank_map, int max_j,
                              et_report** out);
ET_API void et_k0_free(et_k0_complex* m);

/* Variety expressions such as "P(1)*P(1) - P(2)". */
ET_API et_status et_variety_parse(const char* text, et_variety** out);
/* measure: chi_c, poincare, hodge, hodge-higher or count. */
ET_API et_status et_variety_report(const et_variety* v, const char* measure, et_report** out);
ET_API void et_variety_free(et_variety* v);

/* Hom-count matrices: n, then n rows. */
ET_API et_status et_category_parse(const char* text, et_category** out);
ET_API et_status et_category_serialize(const et_category* c, char** out);
ET_API et_status et_category_report(const et_category* c, unsigned order, et_report** out);
ET_API void et_category_free(et_category* c);

/* Betti-vector commands. */
ET_API et_status et_chi_report(const int64_t* betti, size_t count, unsigned max_j, int alternate,
                               et_report** out);
ET_API et_status et_sym_report(const int64_t* betti, size_t count, unsigned order,
                               int verify_euler, et_report** out);
ET_API et_status et_adams_report(uint64_t n, uint64_t k, et_report** out);
ET_API et_status et_selfcheck_report(int inject_fault, et_report** out);

/* Scalar entry points. ET_INPUT_ERROR if the result does not fit. */
ET_API et_status et_chi_from_betti(const int64_t* betti, size_t count, unsigned j, int64_t* out);
ET_API et_status et_adams_grayson(uint64_t n, uint64_t k, int64_t* out);

#ifdef __cplusplus
}
#endif

#endif
