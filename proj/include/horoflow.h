/*
 * Copyright 2026 The horoflow Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to horoflow. Handles are opaque; every call that can fail
 * returns an hf_status and leaves a message in hf_last_error(). */

#ifndef HOROFLOW_H_
#define HOROFLOW_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define HF_API __attribute__((visibility("default")))
#else
#define HF_API
#endif

typedef enum hf_status {
  HF_OK = 0,
  HF_ERR_INVALID_ARGUMENT = 1, /* bad key, null pointer, out-of-range index */
  HF_ERR_DOMAIN = 2,           /* configuration outside the supported domain */
  HF_ERR_PRECISION = 3,        /* working precision exhausted */
  HF_ERR_NUMERIC = 4,
  HF_ERR_INTERNAL = 5
} hf_status;

typedef struct hf_context hf_context;
typedef struct hf_report hf_report;

typedef struct hf_check {
  const char* name;
  const char* ref;
  double bound;
  double observed;
  const char* relation; /* "<=", "<", ">", ">=" */
  int passed;
  const char* note; /* may be empty */
} hf_check;

HF_API int hf_schema_version(void);
HF_API const char* hf_status_string(hf_status status);

/* Message for the last failed call on this thread, "" if none. */
HF_API const char* hf_last_error(void);

/* command: verify-lemmas, key-prop, sequence, witness or render. */
HF_API hf_status hf_context_create(const char* command, hf_context** out);
HF_API void hf_context_destroy(hf_context* ctx);

/* Keys: epsilon, delta, spacing, margin, t-max. */
HF_API hf_status hf_context_set_real(hf_context* ctx, const char* key, double value);
/* Keys: depth, grid, word-ball, precision-bits. */
HF_API hf_status hf_context_set_int(hf_context* ctx, const char* key, int64_t value);
HF_API hf_status hf_context_set_seed(hf_context* ctx, uint64_t seed);

/* Runs the command. A report is produced even when checks fail. */
HF_API hf_status hf_run(const hf_context* ctx, hf_report** out);
HF_API void hf_report_destroy(hf_report* report);

HF_API const char* hf_report_json(const hf_report* report);
HF_API int hf_report_passed(const hf_report* report);
HF_API size_t hf_report_check_count(const hf_report* report);
/* Strings in *out live as long as the report. */
HF_API hf_status hf_report_check(const hf_report* report, size_t index, hf_check* out);
HF_API size_t hf_report_artifact_count(const hf_report* report);
HF_API hf_status hf_report_artifact(const hf_report* report, size_t index, const char** name,
                                    const char** content);

#ifdef __cplusplus
}
#endif

#endif /* HOROFLOW_H_ */
