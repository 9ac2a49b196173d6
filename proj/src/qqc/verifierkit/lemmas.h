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

#ifndef QQC_VERIFIERKIT_LEMMAS_H
#define QQC_VERIFIERKIT_LEMMAS_H

#include "qqc/verifierkit/verifier.h"

namespace qqc {

// Verifier combinators that turn machines into dual pairs. Each one is a pure
// wrapper around the predicate of its argument.

/// Appends `extra` branch bits. When the appended suffix has the form 1*(0|1)
/// the wrapped verifier decides; any other suffix accepts iff its parity is
/// odd. Those other suffixes cancel in pairs, so the half-gap exactly doubles
/// for any extra >= 1.
VerifierPtr pad_with_suffix_rule(const VerifierPtr &v, int extra);

/// Raises the branching length to `target_m` one bit at a time (each step is
/// pad_with_suffix_rule with one extra bit), so the half-gap is multiplied by
/// 2^(target_m - m). Throws UsageError if target_m < m.
VerifierPtr equalize_branch_lengths(const VerifierPtr &v, int target_m);

/// Pads whichever of v0, v1 branches less so both share a branching length.
DualVerifierPair equalize_pair(const VerifierPtr &v0, const VerifierPtr &v1);

/// Builds a dual pair from a single verifier `base` whose half-gap is h(n) on
/// YES inputs and 0 on NO inputs. Both outputs branch on one extra leading
/// bit beta:
///
///   v1: beta = 0 accepts exactly half the remaining branches,
///       beta = 1 runs base.
///   v0: beta = 0 rejects iff the remaining branch value is below
///       2^(m-1) + h, beta = 1 accepts iff base rejects.
///
/// so that Delta1 = Delta_base and Delta0 = h - Delta_base. On every input the
/// nonzero gap amplitude is +h / 2^(m+1).
///
/// Throws PreconditionError (witness = input bits) if some input has a
/// half-gap outside {0, h}, or if h is not in [1, 2^(m-1)].
DualVerifierPair make_dual_lwpp(const VerifierPtr &base, const HalfGapFunction &h);

}  // namespace qqc

#endif
