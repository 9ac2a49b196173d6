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

#ifndef QQC_VERIFIERKIT_CATALOG_H
#define QQC_VERIFIERKIT_CATALOG_H

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qqc/verifierkit/verifier.h"

namespace qqc {

/// A desk-scale problem family: one dual pair per input length.
struct ProblemFamily {
    std::string name;
    std::string description;
    int min_n = 1;
    int max_n = 8;
    /// Membership test for the language, used to cross-check the oracle.
    std::function<bool(const BitString &x)> language;
    std::function<DualVerifierPair(int n)> build;
};

/// ALLZERO, EMPTY, FULL, PARITY, FIRSTBIT.
const std::vector<ProblemFamily> &builtin_problems();
/// nullptr when no builtin has that name (case-insensitive).
const ProblemFamily *find_builtin(std::string_view name);

/// f(x, b) = parity(x AND b) with m = n. Its half-gap is 2^(n-1) at x = 0^n
/// and 0 elsewhere.
VerifierPtr allzero_base(int n);
/// h(n) = 2^(n-1) for the ALLZERO base.
HalfGapFunction allzero_half_gap();

/// Random dual pair backed by truth tables. Each input gets a random answer;
/// the verifier that must vanish there accepts exactly half its branches and
/// the other one accepts any other number of branches. The result is
/// validated with the gap oracle; invalid draws are rejected and redrawn.
DualVerifierPair random_dual_pair(int n, int m, std::uint64_t seed);

/// A random single verifier satisfying the LWPP promise (half-gap h on YES
/// inputs, 0 on NO inputs) for a random h in [1, 2^(m-1)].
struct LwppBase {
    VerifierPtr base;
    HalfGapFunction h;
};
LwppBase random_lwpp_base(int n, int m, std::uint64_t seed);

}  // namespace qqc

#endif
