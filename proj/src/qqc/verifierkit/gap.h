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

#ifndef QQC_VERIFIERKIT_GAP_H
#define QQC_VERIFIERKIT_GAP_H

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "qqc/exactnum/amplitude.h"
#include "qqc/verifierkit/verifier.h"

namespace qqc {

/// Branch counts of one verifier on one input.
///
/// accept + reject = 2^m, delta = (reject - accept) / 2 = reject - 2^(m-1),
/// and alpha, rho, delta_amp are accept, reject, delta divided by 2^m.
struct GapStats {
    std::string verifier;
    BitString x;
    int m = 0;
    std::int64_t accept = 0;
    std::int64_t reject = 0;
    std::int64_t delta = 0;
    Amplitude alpha;
    Amplitude rho;
    Amplitude delta_amp;

    bool operator==(const GapStats &other) const = default;
};

/// Counts accepting and rejecting branches by enumerating all 2^m branching
/// strings. Throws UsageError on an input length mismatch.
GapStats gap_stats(const Verifier &v, const BitString &x);

void to_json(nlohmann::json &j, const GapStats &g);
void from_json(const nlohmann::json &j, GapStats &g);

/// Oracle view of a dual pair on one input.
struct DualEntry {
    BitString x;
    GapStats g0;
    GapStats g1;
    /// L(x): 1 when v0's gap vanishes (x is a YES instance), 0 otherwise.
    int answer = 0;

    /// delta^(L(x))_x, the nonzero gap amplitude.
    const Amplitude &live_delta() const {
        return answer ? g1.delta_amp : g0.delta_amp;
    }
};

/// Computes both gaps on `x` and checks that exactly one is zero. Throws
/// PreconditionError naming `x` when the pair is not dual there.
DualEntry dual_entry(const DualVerifierPair &pair, const BitString &x);

/// dual_entry for every input of length n, in increasing order of x.
std::vector<DualEntry> dual_sweep(const DualVerifierPair &pair);

/// Every x of length n, in increasing order.
std::vector<BitString> all_inputs(int n);

}  // namespace qqc

#endif
