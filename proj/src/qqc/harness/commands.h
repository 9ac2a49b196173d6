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

#ifndef QQC_HARNESS_COMMANDS_H
#define QQC_HARNESS_COMMANDS_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qqc/circuitgen/runs.h"
#include "qqc/harness/problem_spec.h"

namespace qqc {

/// Largest n + m a command accepts without `force_large`.
constexpr int kDeskScaleLimit = 20;

/// un, fig3-zqp, fig3-post, wn, lwpp, lpwpp.
const std::vector<std::string> &construction_names();

struct CommandOptions {
    std::optional<int> n;
    /// Input bit string; when set it also fixes n.
    std::string input;
    /// One of construction_names(); verify also takes "all" (the default).
    std::string construction;
    bool dump_state = false;
    bool checkpoints = false;
    bool dump_circuit = false;
    bool force_large = false;
    std::optional<std::uint64_t> seed;
    /// Added to h(n) before the deciders run (fault injection).
    std::int64_t h_offset = 0;
};

/// Exit code 0 (all checks passed) or 1 (a verification mismatch), plus the
/// JSON report. Usage and spec problems are thrown as UsageError / SpecError.
struct CommandResult {
    int exit_code = 0;
    nlohmann::json report;
};

struct GapReportEntry {
    BitString x;
    std::vector<GapStats> stats;
    /// L(x) when the pair is dual at x.
    std::optional<int> answer;

    bool operator==(const GapReportEntry &other) const = default;
};

struct GapReport {
    std::string problem;
    int n = 0;
    int m = 0;
    std::optional<std::uint64_t> seed;
    std::vector<GapReportEntry> entries;

    bool operator==(const GapReport &other) const = default;
};

nlohmann::json gap_report_to_json(const GapReport &report);
GapReport gap_report_from_json(const nlohmann::json &j);

/// Runs one construction by name. Adds an "answer = L(x)" check to the
/// outcome. Throws UsageError for unknown names or a missing h.
RunOutcome run_construction(
    const std::string &construction,
    const DualVerifierPair &pair,
    const BitString &x,
    const CommandOptions &options);

/// Builds the named construction's circuit for length n.
Circuit build_construction(
    const std::string &construction, const DualVerifierPair &pair, int n, const CommandOptions &options);

CommandResult command_gap(const ProblemSpec &spec, const CommandOptions &options);
CommandResult command_simulate(const ProblemSpec &spec, const CommandOptions &options);
CommandResult command_verify(const ProblemSpec &spec, const CommandOptions &options);
CommandResult command_duals(const ProblemSpec &spec, const CommandOptions &options);

}  // namespace qqc

#endif
