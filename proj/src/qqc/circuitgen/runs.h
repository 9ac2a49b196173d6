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

#ifndef QQC_CIRCUITGEN_RUNS_H
#define QQC_CIRCUITGEN_RUNS_H

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qqc/circuitgen/circuit.h"
#include "qqc/circuitgen/constructions.h"
#include "qqc/verifierkit/gap.h"

namespace qqc {

enum class Verdict { Yes, No, FailBranchMass, Postselected };

std::string verdict_name(Verdict v);
Verdict verdict_from_name(const std::string &name);

/// One exact identity checked during a run.
struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;

    bool operator==(const CheckResult &other) const = default;
};

/// What a construction produced on one input.
///
/// success_mass / failure_mass are the exact squared norms of the accepted and
/// rejected parts of the final state (which parts depends on the
/// construction); the success probability is their ratio, never a float.
struct RunOutcome {
    std::string construction;
    BitString x;
    /// L(x) according to the gap oracle.
    int expected_answer = 0;
    Verdict verdict = Verdict::FailBranchMass;
    std::optional<int> answer;
    Amplitude success_mass;
    Amplitude failure_mass;
    StateVector final_state;
    std::map<std::string, StateVector> checkpoints;
    std::vector<CheckResult> checks;

    bool passed() const;
    const CheckResult *find_check(const std::string &name) const;

    bool operator==(const RunOutcome &other) const = default;
};

struct RunOptions {
    bool record_checkpoints = false;
};

/// Gap-amplitude circuit. Checks the four explicit output amplitudes against
/// the oracle, that the residual has no b = 0^m component, that its squared
/// norm is below 1/2, and that the norm is 1.
RunOutcome run_un(const DualVerifierPair &pair, const BitString &x, const RunOptions &options = {});

/// Zero-error run with p = 2^-m: success iff the flag reads 1. Checks the
/// closed-form output state, success probability > 1/2, zero mass on the wrong
/// answer, and failure/success < (p/delta)^2. Throws PreconditionError when the
/// pair is not dual at x.
RunOutcome run_zqp(const DualVerifierPair &pair, const BitString &x, const RunOptions &options = {});

/// Same circuit with an arbitrary N = diag(p, 1).
RunOutcome run_fig3(
    const DualVerifierPair &pair, const BitString &x, const FlagDamping &damping, const RunOptions &options = {});

/// Postselected run (the flag projected onto 1). Throws MismatchError when the
/// postselected mass is zero.
RunOutcome run_posteqp(const DualVerifierPair &pair, const BitString &x, const RunOptions &options = {});

/// W_n. Throws MismatchError naming the offending basis term when an ancilla
/// is not restored to 0.
RunOutcome run_wn(const DualVerifierPair &pair, const BitString &x, const RunOptions &options = {});

/// The exact decider with A_n. Throws MismatchError naming the residual term
/// when the output is not the single expected basis term.
RunOutcome run_lwpp(
    const DualVerifierPair &pair, const HalfGapFunction &h, const BitString &x, const RunOptions &options = {});

/// The finite-gate-set decider. Also checks the gate alphabet and equality
/// with the A_n-based decider's output.
RunOutcome run_lpwpp(
    const DualVerifierPair &pair,
    const HalfGapFunction &h,
    const BigInt &base,
    std::int64_t t,
    const BitString &x,
    const RunOptions &options = {});

nlohmann::json outcome_to_json(const RunOutcome &outcome, bool include_state, bool include_checkpoints);
RunOutcome outcome_from_json(const nlohmann::json &j);

}  // namespace qqc

#endif
