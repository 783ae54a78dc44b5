/*
 * Copyright 2026 The Dressian Authors.
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

#ifndef DRESSIAN_DRESSIAN_H_
#define DRESSIAN_DRESSIAN_H_

/*
 * C interface of the Dressian library. Objects are opaque handles released
 * with their *_free function. Every call returns a dr_status; on failure a
 * human readable message is available from dr_last_error() on the calling
 * thread until the next library call. Strings returned through char**
 * parameters are JSON documents owned by the caller and released with
 * dr_string_free().
 */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define DR_API __declspec(dllexport)
#else
#define DR_API __attribute__((visibility("default")))
#endif

typedef struct dr_weight dr_weight;
typedef struct dr_arrangement dr_arrangement;

typedef enum dr_status {
  DR_OK = 0,
  DR_ERR_PARSE = 1,
  DR_ERR_PARAMETER = 2,
  DR_ERR_MEMBERSHIP = 3,
  DR_ERR_COMPATIBILITY = 4,
  DR_ERR_EMPTY_CONE = 5,
  DR_ERR_NON_MAXIMAL = 6,
  DR_ERR_RECONSTRUCTION = 7,
  DR_ERR_INFEASIBLE = 8,
  DR_ERR_INTERNAL = 9,
  DR_ERR_NULL_ARGUMENT = 10
} dr_status;

DR_API const char* dr_last_error(void);
DR_API const char* dr_status_name(dr_status status);
DR_API void dr_string_free(char* text);

/* Weights: {"k", "n", "ordering", "values"}. */
DR_API dr_status dr_weight_from_json(const char* json, dr_weight** out);
DR_API dr_status dr_weight_to_json(const dr_weight* w, const char* ordering, char** out);
DR_API void dr_weight_free(dr_weight* w);

/* {"member", "relations", "failing", "signature"}; DR_OK whether or not the
 * weight is a member. */
DR_API dr_status dr_check(const dr_weight* w, char** out);

/* Subdivision document; certify adds per-cell basis exchange verdicts. */
DR_API dr_status dr_subdivide(const dr_weight* w, int certify, char** out);

/* Arrangement document of a Dressian point (DR_ERR_MEMBERSHIP otherwise). */
DR_API dr_status dr_arrange(const dr_weight* w, char** out);

/* Arrangements: {"k", "n", "trees": [{"index", "tree"}]}. */
DR_API dr_status dr_arrangement_from_json(const char* json, dr_arrangement** out);
DR_API dr_status dr_arrangement_to_json(const dr_arrangement* a, char** out);
DR_API void dr_arrangement_free(dr_arrangement* a);

/* Weight of a compatible arrangement (DR_ERR_COMPATIBILITY otherwise). */
DR_API dr_status dr_pi(const dr_arrangement* a, char** out);

/* Metrized arrangement, or DR_ERR_INFEASIBLE. */
DR_API dr_status dr_metrize(const dr_arrangement* a, char** out);

/* Arrangement cherries as a list of subsets. */
DR_API dr_status dr_cherries(const dr_arrangement* a, char** out);

/* {"relation", "differing"} with relation identical, generalized-Whitehead
 * or farther. */
DR_API dr_status dr_compare(const dr_arrangement* a, const dr_arrangement* b, char** out);

/* Maximal cones sharing a facet with the cone of w. */
DR_API dr_status dr_adjacent(const dr_weight* w, char** out);

/* Validates a fan document and reports a point, signature and arrangement
 * per cone. *all_members is cleared when some cone point is not a Dressian
 * point. */
DR_API dr_status dr_ingest_fan(const char* json, char** out, int* all_members);

/* Runs the acceptance criteria; *all_passed is 1 when every one passes. */
DR_API dr_status dr_verify_fixtures(unsigned long long seed, char** out, int* all_passed);

/* Bundled reference documents. */
DR_API dr_status dr_fixture_names(char** out);
DR_API dr_status dr_fixture_json(const char* name, char** out);

#ifdef __cplusplus
}
#endif

#endif /* DRESSIAN_DRESSIAN_H_ */
