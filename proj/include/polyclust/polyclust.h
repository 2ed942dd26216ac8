#ifndef POLYCLUST_H
#define POLYCLUST_H
//------------------------------------------------------------------------------
//
//   Copyright 2026 The polyclust Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

// C interface to the polyclust clustering library. All objects are opaque
// handles owned by the caller and released with the matching *_free call.
// Strings returned by accessors stay valid until the owning handle is freed.
// On failure a function returns a non-zero pc_status and pc_last_error()
// describes the problem (per thread).

#include <stddef.h>

#if defined(POLYCLUST_BUILDING_LIBRARY)
#  define PC_API __attribute__((visibility("default")))
#else
#  define PC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pc_corpus pc_corpus;
typedef struct pc_result pc_result;
typedef struct pc_hits   pc_hits;

typedef enum pc_status
{
  PC_OK              = 0,
  PC_ERROR_INPUT     = 1, /* unreadable or malformed input */
  PC_ERROR_PARAMETER = 2, /* out-of-range parameter, unknown label */
  PC_ERROR_INTERNAL  = 3
} pc_status;

typedef enum pc_format
{
  PC_FORMAT_CSV    = 0,
  PC_FORMAT_REFER  = 1,
  PC_FORMAT_MATRIX = 2
} pc_format;

/* Load flags. */
#define PC_LOAD_TITLE_TOKENS 0x1u       /* refer: add title words as features */
#define PC_LOAD_KEEP_UNINFORMATIVE 0x2u /* keep features held by all/no objects */

typedef struct pc_params
{
  double cohesion;        /* bits, [0, 1] */
  double distinctiveness; /* bits, [0, 1] */
  double alpha;           /* rule frequency cutoff, (0, 1] */
} pc_params;

PC_API pc_params   pc_params_default(void);
PC_API const char *pc_last_error(void);
PC_API const char *pc_version(void);

/* Corpus ------------------------------------------------------------------ */

PC_API pc_status pc_corpus_from_file(const char *path, pc_format format, unsigned flags, pc_corpus **out);
PC_API pc_status pc_corpus_from_text(const char *text, size_t length, pc_format format, unsigned flags,
                                     pc_corpus **out);
PC_API void      pc_corpus_free(pc_corpus *corpus);

PC_API size_t      pc_corpus_object_count(const pc_corpus *corpus);
PC_API size_t      pc_corpus_feature_count(const pc_corpus *corpus);
PC_API const char *pc_corpus_object_label(const pc_corpus *corpus, size_t object);
PC_API const char *pc_corpus_feature_label(const pc_corpus *corpus, size_t feature);
PC_API int         pc_corpus_has_feature(const pc_corpus *corpus, size_t object, size_t feature);
/* Encoding notices (dropped features) and validation warnings. */
PC_API size_t      pc_corpus_notice_count(const pc_corpus *corpus);
PC_API const char *pc_corpus_notice(const pc_corpus *corpus, size_t index);
/* Per-object entropy and pairwise affinity table as text. */
PC_API const char *pc_corpus_info(const pc_corpus *corpus);
PC_API pc_status   pc_affinity(const pc_corpus *corpus, size_t a, size_t b, double *out);

/* Clustering -------------------------------------------------------------- */

PC_API pc_status pc_cluster(const pc_corpus *corpus, const pc_params *params, pc_result **out);
PC_API void      pc_result_free(pc_result *result);

PC_API const char *pc_result_text(const pc_result *result, int with_trace);
PC_API const char *pc_result_json(const pc_result *result);

PC_API size_t pc_result_category_count(const pc_result *result);
PC_API size_t pc_result_category_size(const pc_result *result, size_t category);
PC_API size_t pc_result_category_member(const pc_result *result, size_t category, size_t index);
PC_API size_t pc_result_category_best_member(const pc_result *result, size_t category);
PC_API double pc_result_category_cohesion(const pc_result *result, size_t category);
/* m and n of the category rule; both 0 when the category has no rule. */
PC_API size_t pc_result_rule_m(const pc_result *result, size_t category);
PC_API size_t pc_result_rule_n(const pc_result *result, size_t category);
PC_API size_t pc_result_unclustered_count(const pc_result *result);
PC_API size_t pc_result_unclustered(const pc_result *result, size_t index);
PC_API size_t pc_result_action_count(const pc_result *result);

/* Retrieval --------------------------------------------------------------- */

/* m-of-n rule over feature labels. Hit scores are the number of query
 * features held. */
PC_API pc_status pc_query_rule(const pc_corpus *corpus, size_t m, const char *const *labels, size_t n,
                               pc_hits **out);
/* Same, from "m:label,label,..." text. */
PC_API pc_status pc_query_rule_text(const pc_corpus *corpus, const char *rule, pc_hits **out);
/* Top-k objects by affinity to the seed object. Hit scores are affinities. */
PC_API pc_status pc_query_seed(const pc_corpus *corpus, const char *seed_label, size_t k, pc_hits **out);

PC_API size_t pc_hits_count(const pc_hits *hits);
PC_API size_t pc_hits_object(const pc_hits *hits, size_t index);
PC_API double pc_hits_score(const pc_hits *hits, size_t index);
PC_API void   pc_hits_free(pc_hits *hits);

#ifdef __cplusplus
}
#endif

#endif /* POLYCLUST_H */
