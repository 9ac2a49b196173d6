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

#include "qqc/qqc.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "qqc/errors.h"
#include "qqc/harness/commands.h"

struct qqc_problem {
    qqc::ProblemSpec spec;
};

namespace {

thread_local std::string last_error;

char *copy_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

qqc_status fail(qqc_status status, const std::string &message) {
    last_error = message;
    return status;
}

template <typename F>
qqc_status guarded(char **json_out, F body) {
    if (json_out != nullptr) {
        *json_out = nullptr;
    }
    last_error.clear();
    try {
        return body();
    } catch (const qqc::SpecError &e) {
        return fail(QQC_SPEC_ERROR, e.what());
    } catch (const qqc::UsageError &e) {
        return fail(QQC_USAGE_ERROR, e.what());
    } catch (const qqc::NotInvertibleError &e) {
        return fail(QQC_USAGE_ERROR, e.what());
    } catch (const qqc::Error &e) {
        return fail(QQC_MISMATCH, e.what());
    } catch (const std::exception &e) {
        return fail(QQC_INTERNAL_ERROR, e.what());
    }
}

qqc::CommandOptions convert(const qqc_options *options) {
    qqc::CommandOptions out;
    if (options == nullptr) {
        return out;
    }
    if (options->n >= 0) {
        out.n = options->n;
    }
    if (options->input != nullptr) {
        out.input = options->input;
    }
    if (options->construction != nullptr) {
        out.construction = options->construction;
    }
    out.dump_state = options->dump_state != 0;
    out.checkpoints = options->checkpoints != 0;
    out.dump_circuit = options->dump_circuit != 0;
    out.force_large = options->force_large != 0;
    out.h_offset = options->h_offset;
    return out;
}

qqc_status run_command(
    qqc::CommandResult (*command)(const qqc::ProblemSpec &, const qqc::CommandOptions &),
    const qqc_problem *problem,
    const qqc_options *options,
    char **json_out) {
    return guarded(json_out, [&]() {
        if (problem == nullptr || json_out == nullptr) {
            return fail(QQC_USAGE_ERROR, "null problem or output pointer");
        }
        qqc::CommandResult result = command(problem->spec, convert(options));
        *json_out = copy_string(result.report.dump(2));
        return result.exit_code == 0 ? QQC_OK : QQC_MISMATCH;
    });
}

}  // namespace

extern "C" {

void qqc_options_init(qqc_options *options) {
    if (options == nullptr) {
        return;
    }
    std::memset(options, 0, sizeof(*options));
    options->n = -1;
}

qqc_status qqc_problem_load(const char *problem, uint64_t seed, int has_seed, qqc_problem **out) {
    return guarded(nullptr, [&]() {
        if (problem == nullptr || out == nullptr) {
            return fail(QQC_USAGE_ERROR, "null problem name or output pointer");
        }
        *out = nullptr;
        std::optional<std::uint64_t> s;
        if (has_seed) {
            s = seed;
        }
        *out = new qqc_problem{qqc::resolve_problem(problem, s)};
        return QQC_OK;
    });
}

void qqc_problem_free(qqc_problem *problem) {
    delete problem;
}

qqc_status qqc_problem_json(const qqc_problem *problem, char **json_out) {
    return guarded(json_out, [&]() {
        if (problem == nullptr || json_out == nullptr) {
            return fail(QQC_USAGE_ERROR, "null problem or output pointer");
        }
        *json_out = copy_string(qqc::problem_spec_to_json(problem->spec).dump(2));
        return QQC_OK;
    });
}

qqc_status qqc_gap(const qqc_problem *problem, const qqc_options *options, char **json_out) {
    return run_command(qqc::command_gap, problem, options, json_out);
}

qqc_status qqc_simulate(const qqc_problem *problem, const qqc_options *options, char **json_out) {
    return run_command(qqc::command_simulate, problem, options, json_out);
}

qqc_status qqc_verify(const qqc_problem *problem, const qqc_options *options, char **json_out) {
    return run_command(qqc::command_verify, problem, options, json_out);
}

qqc_status qqc_duals(const qqc_problem *problem, const qqc_options *options, char **json_out) {
    return run_command(qqc::command_duals, problem, options, json_out);
}

void qqc_string_free(char *s) {
    std::free(s);
}

const char *qqc_last_error(void) {
    return last_error.c_str();
}

const char *qqc_version(void) {
    return "0.1.0";
}

}  // extern "C"
