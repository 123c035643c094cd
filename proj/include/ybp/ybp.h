// Copyright 2026 The ybpoisson Authors
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

#ifndef YBP_YBP_H
#define YBP_YBP_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(YBP_BUILDING_LIBRARY)
#define YBP_API __attribute__((visibility("default")))
#else
#define YBP_API
#endif

typedef enum ybp_status {
  YBP_OK = 0,
  YBP_CHECK_FAILED = 1,
  YBP_ERR_INPUT = 2,
  YBP_ERR_PARSE = 3,
  YBP_ERR_PRECONDITION = 4,
  YBP_ERR_BOUNDS = 5,
  YBP_ERR_TRUNCATION = 6,
  YBP_ERR_INTERNAL = 7
} ybp_status;

typedef struct ybp_job ybp_job;
typedef struct ybp_report ybp_report;
typedef struct ybp_map ybp_map;

YBP_API const char* ybp_version(void);
YBP_API const char* ybp_status_name(ybp_status s);
/* Message of the last failed call on this thread ("" if none). */
YBP_API const char* ybp_last_error(void);

/* Strings returned through char** are owned by the caller. */
YBP_API void ybp_string_free(char* s);

/* Jobs: command names and keys as in the harness (ybe.check, r=path, ...). */
YBP_API ybp_status ybp_job_new(const char* command, ybp_job** out);
YBP_API ybp_status ybp_job_set(ybp_job* job, const char* key, const char* value);
YBP_API void ybp_job_free(ybp_job* job);

/* Runs the jobs and always hands back a report when out is set. Returns
   YBP_OK if every job passed, YBP_CHECK_FAILED if some check failed, or the
   error status of the first job that raised. */
YBP_API ybp_status ybp_run(const ybp_job* const* jobs, size_t count, ybp_report** out);
YBP_API ybp_status ybp_run_suite_file(const char* path, ybp_report** out);
YBP_API ybp_status ybp_run_builtin_suite(ybp_report** out);

YBP_API int ybp_report_passed(const ybp_report* r);
YBP_API size_t ybp_report_job_count(const ybp_report* r);
/* Valid until ybp_report_free. */
YBP_API const char* ybp_report_text(const ybp_report* r);
YBP_API void ybp_report_free(ybp_report* r);

/* Tensor maps. */
YBP_API ybp_status ybp_map_load(const char* path, ybp_map** out);
YBP_API ybp_status ybp_map_parse(const char* text, ybp_map** out);
YBP_API int ybp_map_dim(const ybp_map* m);
YBP_API int ybp_map_domain(const ybp_map* m);
YBP_API int ybp_map_codomain(const ybp_map* m);
YBP_API size_t ybp_map_nnz(const ybp_map* m);
/* kind: "cybe", "aybe" or "qybe". */
YBP_API ybp_status ybp_map_residual(const ybp_map* r, const char* kind, ybp_map** out);
YBP_API ybp_status ybp_map_to_text(const ybp_map* m, char** out);
YBP_API void ybp_map_free(ybp_map* m);

/* Parses any input file and reports its schema kind. */
YBP_API ybp_status ybp_validate_file(const char* path, char** kind_out);

/* Skew fixtures on V (x) V. kind: "skew", "skew-cybe" or "skew-aybe";
   values: comma separated rationals. Solutions are written as one tensormap
   file per solution, separated by blank lines. */
YBP_API ybp_status ybp_fixture_search(const char* kind, int dim, const char* values, size_t* count, char** out);

#ifdef __cplusplus
}
#endif

#endif
