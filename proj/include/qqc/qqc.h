// Copyright 2026 The qqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QQC_QQC_H
#define QQC_QQC_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define QQC_API __attribute__((visibility("default")))
#else
#define QQC_API
#endif

/// Status codes. QQC_MISMATCH means a report was produced and at least one
/// exact check failed.
typedef enum qqc_status {
    QQC_OK = 0,
    QQC_MISMATCH = 1,
    QQC_USAGE_ERROR = 2,
    QQC_SPEC_ERROR = 3,
    QQC_INTERNAL_ERROR = 4,
} qqc_status;

/// A loaded problem: a spec file or a builtin family.
typedef struct qqc_problem qqc_problem;

typedef struct qqc_options {
    /// Input length; ignored when negative.
    int n;
    /// Input bit string or NULL.
    const char *input;
    /// Construction name or NULL (simulate defaults to "un", verify to all).
    const char *construction;
    int dump_state;
    int checkpoints;
    int dump_circuit;
    int force_large;
    /// Added to h(n) before the deciders run.
    int64_t h_offset;
} qqc_options;

QQC_API void qqc_options_init(qqc_options *options);

/// Loads `problem` (a spec file path or a builtin name). `seed` feeds the
/// RANDOM builtin and is ignored when `has_seed` is 0.
QQC_API qqc_status qqc_problem_load(const char *problem, uint64_t seed, int has_seed, qqc_problem **out);
QQC_API void qqc_problem_free(qqc_problem *problem);

/// The problem spec as JSON. Free with qqc_string_free.
QQC_API qqc_status qqc_problem_json(const qqc_problem *problem, char **json_out);

/// Each command writes its JSON report to *json_out (free with
/// qqc_string_free). On QQC_USAGE_ERROR / QQC_SPEC_ERROR / QQC_INTERNAL_ERROR
/// *json_out is NULL and qqc_last_error() describes the problem.
QQC_API qqc_status qqc_gap(const qqc_problem *problem, const qqc_options *options, char **json_out);
QQC_API qqc_status qqc_simulate(const qqc_problem *problem, const qqc_options *options, char **json_out);
QQC_API qqc_status qqc_verify(const qqc_problem *problem, const qqc_options *options, char **json_out);
QQC_API qqc_status qqc_duals(const qqc_problem *problem, const qqc_options *options, char **json_out);

QQC_API void qqc_string_free(char *s);

/// Message of the last failed call on this thread ("" if none).
QQC_API const char *qqc_last_error(void);

QQC_API const char *qqc_version(void);

#ifdef __cplusplus
}
#endif

#endif
