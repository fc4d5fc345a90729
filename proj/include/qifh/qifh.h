/*
 * Copyright 2026 The qifh Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef QIFH_QIFH_H_
#define QIFH_QIFH_H_

#include <stddef.h>
#include <stdint.h>

#if defined(QIFH_BUILDING_LIBRARY)
#define QIFH_API __attribute__((visibility("default")))
#else
#define QIFH_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Every function returning int returns one of these. */
enum {
  QIFH_OK = 0,
  QIFH_E_PARSE = 1,
  QIFH_E_INVALID_ARGUMENT = 2,
  QIFH_E_ZERO_ORDINAL = 3,
  QIFH_E_SINGLETON_TERM = 4,
  QIFH_E_NOT_AUTOMORPHISM = 5,
  QIFH_E_NOT_OPEN_SURJECTION = 6,
  QIFH_E_DIFFERENT_SPACES = 7,
  QIFH_E_DIFFERENT_Q = 8,
  QIFH_E_NO_REDUCT = 9,
  QIFH_E_NODE_NOT_IN_TREE = 10,
  QIFH_E_INVALID_FAMILY = 11,
  QIFH_E_UNKNOWN_SUITE = 12,
  QIFH_E_IO = 13,
  QIFH_E_BUDGET_EXCEEDED = 14,
  QIFH_E_NULL_POINTER = 98,
  QIFH_E_INTERNAL = 99
};

typedef struct qifh_qo qifh_qo;
typedef struct qifh_term qifh_term;
typedef struct qifh_space qifh_space;
typedef struct qifh_base qifh_base;

/* Message for the last failing call on this thread ("" if none). */
QIFH_API const char* qifh_last_error(void);
QIFH_API const char* qifh_status_name(int status);
QIFH_API const char* qifh_version(void);
/* Releases strings returned through char** out-parameters. */
QIFH_API void qifh_free_string(char* s);

/* Ordinals, as literals such as "w^2*3+w+1". */
QIFH_API int qifh_ord_normalize(const char* ord, char** out);
QIFH_API int qifh_ord_compare(const char* a, const char* b, int* out); /* -1, 0, 1 */
QIFH_API int qifh_ord_add(const char* a, const char* b, char** out);
QIFH_API int qifh_ord_star(const char* a, char** out);
QIFH_API int qifh_fmap(const char* a, char** out);

/* Quasiorders: {"size": k, "le": [[i,j],...], "names": {...}}. */
QIFH_API int qifh_qo_from_json(const char* json, qifh_qo** out);
QIFH_API int qifh_qo_antichain(size_t size, qifh_qo** out);
QIFH_API int qifh_qo_chain(size_t size, qifh_qo** out);
QIFH_API void qifh_qo_free(qifh_qo* q);
QIFH_API size_t qifh_qo_size(const qifh_qo* q);
/* JSON array of permutations. */
QIFH_API int qifh_qo_automorphisms(const qifh_qo* q, char** json_out);

/* Terms. */
QIFH_API int qifh_term_parse(const char* text, qifh_term** out);
QIFH_API void qifh_term_free(qifh_term* u);
QIFH_API int qifh_term_to_string(const qifh_term* u, char** out);
/* gamma may be NULL for no subscript bound. */
QIFH_API int qifh_term_validate(const qifh_term* u, size_t q_size, const char* gamma);
QIFH_API int qifh_term_rank(const qifh_term* u, size_t* out);
/* {"shift": "<ord>", "core": "<term>", "chain": ["<ord>", ...], "singleton": bool} */
QIFH_API int qifh_term_decompose(const qifh_term* u, char** json_out);
/* T(u) as {"nodes": [...], "labels": {...}}. */
QIFH_API int qifh_term_tree(const qifh_term* u, char** json_out);
QIFH_API int qifh_term_tree_dot(const qifh_term* u, char** dot_out);
QIFH_API int qifh_term_syntax_dot(const qifh_term* u, char** dot_out);
/* F(u) as [{"path": "(e;0)", "value": q}, ...]. */
QIFH_API int qifh_term_paths(const qifh_term* u, char** json_out);
QIFH_API int qifh_term_leq(const qifh_qo* q, const qifh_term* u, const qifh_term* v, int* out);
/* g as a JSON array. */
QIFH_API int qifh_term_apply_aut(const qifh_qo* q, const char* perm_json, const qifh_term* u, qifh_term** out);

/* Q-labeled trees {"nodes": [...], "labels": {...}} compared by <=_h. */
QIFH_API int qifh_hom_leq(const qifh_qo* q, const char* tree_a, const char* tree_b, int* out);

/* Spaces: a space document, or "S", "D<n>", "C<n>". */
QIFH_API int qifh_space_from_json(const char* json, qifh_space** out);
QIFH_API void qifh_space_free(qifh_space* x);
QIFH_API size_t qifh_space_size(const qifh_space* x);
/* {"points", "le", "opens", "maximal"} */
QIFH_API int qifh_space_describe(const qifh_space* x, char** json_out);
QIFH_API int qifh_space_is_meager(const qifh_space* x, const char* set_json, int* out);
/* Maps: {"source", "target", "values"}. */
QIFH_API int qifh_map_is_cos(const char* map_json, int* out);
QIFH_API int qifh_cat_quantifier(const char* map_json, const char* set_json, char** set_out);
/* Partitions: {"values": {...}} over x. */
QIFH_API int qifh_wadge_leq(const qifh_space* x, const qifh_qo* q, const char* a_json, const char* b_json, int* out);

/* Bases: "borel" or {"steps": [...]}. */
QIFH_API int qifh_base_from_json(const qifh_space* x, const char* json, qifh_base** out);
QIFH_API void qifh_base_free(qifh_base* b);
QIFH_API int qifh_base_to_json(const qifh_base* b, char** json_out);
QIFH_API int qifh_base_shift(const qifh_base* b, const char* beta, qifh_base** out);
QIFH_API int qifh_base_restrict(const qifh_base* b, const char* set_json, qifh_base** out);

/* Families. Evaluation yields {"values": {...}} or {"undetermined": {...}}. */
QIFH_API int qifh_family_eval(const qifh_base* b, const char* family_json, char** json_out);
QIFH_API int qifh_family_reduct(const qifh_base* b, const char* family_json, char** json_out);
QIFH_API int qifh_family_pullback(const char* map_json, const qifh_base* target, const char* family_json,
                                  char** json_out);
QIFH_API int qifh_family_pushforward(const char* map_json, const qifh_base* source, const char* family_json,
                                     char** json_out);

/* Membership of a partition {"values": {...}} in L(X, u). */
QIFH_API int qifh_member(const qifh_base* b, const qifh_qo* q, const qifh_term* u, const char* partition_json,
                         int reduced_only, int* out);
QIFH_API int qifh_member_enum(const qifh_base* b, const qifh_qo* q, const qifh_term* u, const char* partition_json,
                              uint64_t budget, int* out);
/* JSON array of partitions. */
QIFH_API int qifh_level_set(const qifh_base* b, const qifh_qo* q, const qifh_term* u, char** json_out);

/* Property suites. config: {"suite": ..., "seed": ..., "max_nodes": ..., ...}.
   *passed is 1 iff the suite found no violation. */
QIFH_API int qifh_suite_names(char** json_out);
QIFH_API int qifh_suite_default_config(const char* suite, char** json_out);
QIFH_API int qifh_suite_run(const char* config_json, char** report_json, char** report_text, int* passed);

#ifdef __cplusplus
}
#endif

#endif /* QIFH_QIFH_H_ */
