// Copyright 2026 The cokeep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COKEEP_COKEEP_H_
#define COKEEP_COKEEP_H_

#include <stddef.h>
#include <stdint.h>

#if defined(COKEEP_BUILDING_LIBRARY)
#define COKEEP_API __attribute__((visibility("default")))
#else
#define COKEEP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cokeep_graph cokeep_graph;
typedef struct cokeep_tree cokeep_tree;

typedef enum cokeep_status {
  COKEEP_OK = 0,
  COKEEP_INVALID_ARGUMENT,
  COKEEP_IO_ERROR,
  COKEEP_SYNTAX_ERROR,
  COKEEP_ARITY_ERROR,
  COKEEP_EMPTY_SET,
  COKEEP_UNKNOWN_VERTEX,
  COKEEP_UNKNOWN_EDGE,
  COKEEP_WOULD_BE_EMPTY,
  COKEEP_NOT_A_COGRAPH,
  COKEEP_NOT_CONNECTED,
  COKEEP_NOT_K_CONNECTED,
  COKEEP_NOT_K_EDGE_CONNECTED,
  COKEEP_NOT_MAXIMALLY_CONNECTED,
  COKEEP_NOT_SUPER,
  COKEEP_IS_KM,
  COKEEP_DEGREE_TOO_LOW,
  COKEEP_BOUND_VIOLATED,
  COKEEP_PART_TOO_SMALL,
  COKEEP_MISSING_CROSS_EDGE,
  COKEEP_PARAM_VIOLATION,
  COKEEP_BAD_SPEC,
  COKEEP_TOO_LARGE,
  COKEEP_DISCONNECTED,
  COKEEP_POSTCONDITION_FAILED,
  COKEEP_INTERNAL_ERROR,
} cokeep_status;

/* "Ok", "BoundViolated", ... */
COKEEP_API const char* cokeep_status_name(cokeep_status status);
/* 0 ok, 1 usage, 2 I/O, 3 domain error, 4 postcondition or internal. */
COKEEP_API int cokeep_status_exit_code(cokeep_status status);

/* Details of the last failure on this thread. Valid until the next call. */
COKEEP_API const char* cokeep_last_error_message(void);
/* JSON object {"error": ..., "message": ..., ...}. */
COKEEP_API const char* cokeep_last_error_json(void);

/* Releases strings returned through `char** out` parameters. */
COKEEP_API void cokeep_string_free(char* s);

COKEEP_API cokeep_status cokeep_graph_parse_edge_list(const char* text,
                                                      cokeep_graph** out);
COKEEP_API cokeep_status cokeep_graph_parse_expression(const char* text,
                                                       cokeep_graph** out);
/* `pairs` holds 2 * edge_count vertex labels in 0..n-1. */
COKEEP_API cokeep_status cokeep_graph_from_edges(int n, const int* pairs,
                                                 size_t edge_count,
                                                 cokeep_graph** out);
COKEEP_API void cokeep_graph_free(cokeep_graph* g);
COKEEP_API int cokeep_graph_order(const cokeep_graph* g);
COKEEP_API size_t cokeep_graph_edge_count(const cokeep_graph* g);
/* Edge-list text of the graph. */
COKEEP_API cokeep_status cokeep_graph_format(const cokeep_graph* g, char** out);

/* {"cograph": true, "expression": ...} or {"cograph": false, "witness": [...]}. */
COKEEP_API cokeep_status cokeep_recognize(const cokeep_graph* g, char** json);
COKEEP_API cokeep_status cokeep_analyze(const cokeep_graph* g, char** json);

/* "path:m", "star:m", "prufer:a,b,...", "edges:u-v,...". */
COKEEP_API cokeep_status cokeep_tree_parse(const char* spec, cokeep_tree** out);
COKEEP_API cokeep_status cokeep_tree_random(int m, uint64_t seed,
                                            cokeep_tree** out);
COKEEP_API void cokeep_tree_free(cokeep_tree* t);
COKEEP_API int cokeep_tree_order(const cokeep_tree* t);

/* theorem: th1 th2 maxcon th3 th4 th6 superkeep th5. `tree2` may be NULL,
 * in which case the two-tree theorems use `tree` twice. */
COKEEP_API cokeep_status cokeep_embed(const cokeep_graph* g,
                                      const char* theorem,
                                      const cokeep_tree* tree,
                                      const cokeep_tree* tree2, int k,
                                      char** json);

/* Oracle cross-checks. `options_json` may be NULL or an object with keys
 * embedding_cap, cut_cap, theorem, tree, tree2, k. */
COKEEP_API cokeep_status cokeep_verify(const cokeep_graph* g,
                                       const char* options_json, char** json);

COKEEP_API cokeep_status cokeep_gen_tight(const char* kind, int k, int m,
                                          char** json);
COKEEP_API cokeep_status cokeep_gen_random(int n, uint64_t seed,
                                           double join_bias, char** json);

#ifdef __cplusplus
}
#endif

#endif /* COKEEP_COKEEP_H_ */
