/* Copyright 2026 the sgq developers
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

/* Stable C surface of the sgq shared library.
 *
 * All computations run on opaque handles.  Every fallible call returns an
 * sgq_status; on failure *error (when non-NULL) receives a malloc'd message
 * to be released with sgq_string_free.  Status values double as the exit
 * codes of the command-line tool: 1 input/validation error, 2 precondition
 * violation, 3 internal consistency failure.
 */

#ifndef SGQ_H_
#define SGQ_H_

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sgq_status {
  SGQ_OK = 0,
  SGQ_ERROR_INPUT = 1,
  SGQ_ERROR_PRECONDITION = 2,
  SGQ_ERROR_INTERNAL = 3
} sgq_status;

typedef struct sgq_semigroup sgq_semigroup; /* semigroup + its analysis */
typedef struct sgq_table_set sgq_table_set; /* character tables per J-class */
typedef struct sgq_quiver sgq_quiver;

void sgq_string_free(char* s);
void sgq_semigroup_free(sgq_semigroup* s);
void sgq_table_set_free(sgq_table_set* t);
void sgq_quiver_free(sgq_quiver* q);

/* ---- construction ---- */

/* Parse a semigroup JSON document (table or generators form).  element_cap
 * bounds generator enumeration; pass 0 for the default. */
sgq_status sgq_semigroup_parse(const char* json_text, long element_cap,
                               sgq_semigroup** out, char** error);

sgq_status sgq_semigroup_opposite(const sgq_semigroup* s, sgq_semigroup** out,
                                  char** error);

/* Build opposite(Sigma_n^G) ready for quiver computation, together with the
 * block-power character tables of its maximal subgroups.  group_json may be
 * NULL for the trivial group; group_table_json may supply the character
 * table of G when it is neither abelian nor fully symmetric. */
sgq_status sgq_hsiao_build(int n, const char* group_json,
                           const char* group_table_json, long element_cap,
                           sgq_semigroup** out, sgq_table_set** out_tables,
                           char** error);

/* Build the permutation group of the generator file with adjoined constant
 * maps, plus character tables (char_table_json may be NULL to use the
 * built-in constructions). */
sgq_status sgq_gbar_build(const char* generators_json,
                          const char* char_table_json, long element_cap,
                          sgq_semigroup** out, sgq_table_set** out_tables,
                          char** error);

/* ---- reports ---- */

long sgq_semigroup_order(const sgq_semigroup* s);

sgq_status sgq_analyze_report(const sgq_semigroup* s, int as_json, char** out,
                              char** error);

/* out_directed receives 0/1; the report names per-class expansion ranks. */
sgq_status sgq_directed_report(const sgq_semigroup* s, int as_json,
                               int* out_directed, char** out, char** error);

sgq_status sgq_nico_report(const sgq_semigroup* s, int as_json, char** out,
                           char** error);

sgq_status sgq_cartan_report(const sgq_semigroup* s, const sgq_table_set* tables,
                             int run_oracle, int as_json, char** out,
                             char** error);

/* Rank and representation type of a transitive permutation action. */
sgq_status sgq_classify_report(const char* generators_json, long element_cap,
                               char** out, char** error);

/* ---- character tables ---- */

sgq_status sgq_table_set_new(sgq_table_set** out);

/* Register a character-table JSON document for one J-class of s. */
sgq_status sgq_table_set_add(sgq_table_set* t, const sgq_semigroup* s,
                             int jclass, const char* table_json, char** error);

/* ---- quivers ---- */

/* Quiver of an RRBG monoid algebra.  tables may be NULL (built-in tables
 * only); run_oracle cross-checks every abelian pair against the explicit
 * Ext construction. */
sgq_status sgq_quiver_compute(const sgq_semigroup* s, const sgq_table_set* tables,
                              int run_oracle, sgq_quiver** out, char** error);

/* Closed-form quiver on Irr(G)-labelled set partitions. */
sgq_status sgq_hsiao_quiver_closed(int n, const char* group_json,
                                   const char* group_table_json,
                                   sgq_quiver** out, char** error);

/* Closed-form quiver of a permutation group with adjoined constants. */
sgq_status sgq_gbar_quiver_closed(const char* generators_json,
                                  const char* char_table_json, long element_cap,
                                  sgq_quiver** out, char** error);

/* Equality as labelled multidigraphs (vertex display names + arrow
 * multiplicities). */
sgq_status sgq_quiver_equal(const sgq_quiver* a, const sgq_quiver* b,
                            int* out_equal);

long sgq_quiver_vertex_count(const sgq_quiver* q);
long sgq_quiver_arrow_count(const sgq_quiver* q); /* total multiplicity */

/* format: "json", "dot" or "text". */
sgq_status sgq_quiver_render(const sgq_quiver* q, const char* format, char** out,
                             char** error);

#ifdef __cplusplus
}
#endif

#endif /* SGQ_H_ */
