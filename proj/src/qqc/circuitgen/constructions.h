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

#ifndef QQC_CIRCUITGEN_CONSTRUCTIONS_H
#define QQC_CIRCUITGEN_CONSTRUCTIONS_H

#include <cstdint>

#include "qqc/circuitgen/circuit.h"
#include "qqc/verifierkit/verifier.h"

namespace qqc {

/// The gap-amplitude circuit on wires (x, b, c, a):
///   H on every b wire and on c; v0 XORed onto a when c = 0; v1 XORed onto a
///   when c = 1; H on every b wire; H on a.
/// On |x>|0^(m+2)> the component |x>|0^m>|c>|1> carries delta^(c)_x and each
/// |x>|0^m>|c>|0> carries 1/2.
///
/// Checkpoints: "Psi1" (after the oracles), "Psi2" (after the second round of
/// Hadamards on b), "Psi3" (output).
Circuit build_un(const DualVerifierPair &pair, int n);

/// The gate list of build_un laid out on `regs` (which may carry an s wire).
std::vector<Gate> un_gates(const DualVerifierPair &pair, const Registers &regs);

/// How the flag wire of the zero-error circuit is damped.
struct FlagDamping {
    enum class Kind {
        /// m copies of B = diag(1/2, 1): p = 2^-m.
        BPower,
        /// One N = diag(p, 1).
        NGate,
        /// The projector |1><1| (p = 0, postselection).
        Project,
    };
    Kind kind = Kind::BPower;
    Amplitude p;

    static FlagDamping b_power() {
        return {Kind::BPower, {}};
    }
    static FlagDamping n_gate(Amplitude p) {
        return {Kind::NGate, std::move(p)};
    }
    static FlagDamping project() {
        return {Kind::Project, {}};
    }
    /// The effective damping factor p for a branching length m.
    Amplitude factor(int m) const;
};

/// U_n, then an MCX that flips s when b = 0^m and a = 1, then a cycle of
/// (c, a, s) so that c <- a, a <- s, s <- c, then the damping on wire a.
/// After the cycle the flag sits on wire a and the answer on wire s; the
/// output is
///   |x>|0^m>(p/2 |000> + p/2 |001> + delta^(L)|11>|L>) + p |psi''>.
///
/// Checkpoints: "Un" (after U_n), "flagged" (after the MCX), "cycled",
/// "PsiL" (output). Throws UsageError for an N gate with p outside [0, 1].
Circuit build_fig3(const DualVerifierPair &pair, int n, const FlagDamping &damping);

/// The invertible circuit W_n on wires (x, b, c, a, s): U_n, MCX onto s when
/// b = 0^m and a = 1, S on s, U_n^-1 conditioned on s = 0, CNOT s -> a.
/// Output: |x>|0^m>|000> + delta^(L)|x>|0^m>|L>|0>|1>.
///
/// Checkpoints: "Phi1", "Phi2", "Phi3", "Phi4".
Circuit build_wn(const DualVerifierPair &pair, int n);

/// W_n, SWAP(c, s), m copies of B and A_n = diag(h(n), 1) on c, then D on
/// (c, s). For a valid witness h the output is exactly
/// (h(n)/2^m)|x>|0^m>|1>|0>|L(x)>.
///
/// Checkpoints: "Wn", "swapped", "scaled", "PhiL".
Circuit build_lwpp_decider(const DualVerifierPair &pair, const HalfGapFunction &h, int n);

/// As build_lwpp_decider with A_n replaced by t copies of G = diag(M, 1).
/// Throws PreconditionError unless h(n) = M^t exactly.
Circuit build_lpwpp_decider(
    const DualVerifierPair &pair, const HalfGapFunction &h, const BigInt &base, std::int64_t t, int n);

/// True when every gate is drawn from {X, CNOT, TOFFOLI, H, S, B, G, D} plus
/// classical permutation gates (MCX, SWAP, CYCLE, ORACLE) that reduce to X,
/// CNOT and TOFFOLI. Extra controls are not counted against the set.
bool uses_finite_gate_set(const Circuit &circuit);

}  // namespace qqc

#endif
