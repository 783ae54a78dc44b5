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

/* Exercises the shared library through its C interface only. */

#include <stdio.h>
#include <string.h>

#include "dressian/dressian.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, \
              #cond);                                             \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static const char* kZero36 =
    "{\"k\":3,\"n\":6,\"values\":[0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0]}";
static const char* kNotMember = "{\"k\":2,\"n\":4,\"values\":[0,1,2,3,4,0]}";

int main(void) {
  dr_weight* w = NULL;
  char* out = NULL;

  EXPECT(dr_weight_from_json(kZero36, &w) == DR_OK);
  EXPECT(dr_check(w, &out) == DR_OK);
  EXPECT(out && strstr(out, "\"member\": true"));
  dr_string_free(out);
  EXPECT(dr_subdivide(w, 1, &out) == DR_OK);
  EXPECT(out && strstr(out, "\"all_matroidal\": true"));
  dr_string_free(out);
  EXPECT(dr_weight_to_json(w, "colex", &out) == DR_OK);
  EXPECT(out && strstr(out, "colex"));
  dr_string_free(out);
  EXPECT(dr_weight_to_json(w, "sideways", &out) == DR_ERR_PARSE);
  EXPECT(dr_adjacent(w, &out) == DR_ERR_NON_MAXIMAL);
  dr_weight_free(w);

  EXPECT(dr_weight_from_json(kNotMember, &w) == DR_OK);
  EXPECT(dr_check(w, &out) == DR_OK);
  EXPECT(out && strstr(out, "\"member\": false"));
  dr_string_free(out);
  EXPECT(dr_arrange(w, &out) == DR_ERR_MEMBERSHIP);
  EXPECT(strlen(dr_last_error()) > 0);
  dr_weight_free(w);

  EXPECT(dr_weight_from_json("{\"k\":2,\"n\":4,\"values\":[0.5,0,0,0,0,0]}", &w) ==
         DR_ERR_PARSE);
  EXPECT(dr_weight_from_json("[", &w) == DR_ERR_PARSE);
  EXPECT(dr_weight_from_json("{\"k\":5,\"n\":4,\"values\":[]}", &w) != DR_OK);
  EXPECT(dr_weight_from_json(NULL, &w) == DR_ERR_NULL_ARGUMENT);
  EXPECT(dr_check(NULL, &out) == DR_ERR_NULL_ARGUMENT);
  EXPECT(strcmp(dr_status_name(DR_ERR_INFEASIBLE), "") != 0);

  /* Fixture arrangement: compare with itself and push through pi. */
  EXPECT(dr_fixture_json("cone-class-5", &out) == DR_OK);
  dr_arrangement* a = NULL;
  EXPECT(dr_arrangement_from_json(out, &a) == DR_OK);
  dr_string_free(out);
  EXPECT(dr_compare(a, a, &out) == DR_OK);
  EXPECT(out && strstr(out, "identical"));
  dr_string_free(out);
  EXPECT(dr_cherries(a, &out) == DR_OK);
  dr_string_free(out);
  EXPECT(dr_metrize(a, &out) == DR_OK);
  dr_arrangement* m = NULL;
  EXPECT(dr_arrangement_from_json(out, &m) == DR_OK);
  dr_string_free(out);
  EXPECT(dr_pi(m, &out) == DR_OK);
  dr_string_free(out);
  dr_arrangement_free(m);
  dr_arrangement_free(a);

  EXPECT(dr_fixture_json("missing", &out) == DR_ERR_PARAMETER);
  EXPECT(dr_fixture_names(&out) == DR_OK);
  EXPECT(out && strstr(out, "delta48-weight"));
  dr_string_free(out);

  if (failures) fprintf(stderr, "%d failure(s)\n", failures);
  return failures ? 1 : 0;
}
