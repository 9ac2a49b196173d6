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

#include "qqc/verifierkit/lemmas.h"

#include "qqc/errors.h"
#include "qqc/verifierkit/gap.h"

namespace qqc {

namespace {

// All bits but the last are ones.
bool defers_to_inner(const BitString &suffix) {
    for (int k = 0; k + 1 < suffix.width; k++) {
        if (!suffix[k]) {
            return false;
        }
    }
    return true;
}

}  // namespace

VerifierPtr pad_with_suffix_rule(const VerifierPtr &v, int extra) {
    if (extra < 0) {
        throw UsageError("cannot pad by a negative number of bits");
    }
    if (extra == 0) {
        return v;
    }
    const int m = v->m();
    return make_verifier(
        v->n(),
        m + extra,
        [inner = v, m, extra](const BitString &x, const BitString &b) {
            BitString suffix = b.slice(m, extra);
            if (defers_to_inner(suffix)) {
                return (*inner)(x, b.slice(0, m));
            }
            return (suffix.popcount() & 1) == 1;
        },
        VerifierBacking::Composite,
        v->name() + "+pad" + std::to_string(extra));
}

VerifierPtr equalize_branch_lengths(const VerifierPtr &v, int target_m) {
    if (target_m < v->m()) {
        throw UsageError(
            "equalize_branch_lengths: target m = " + std::to_string(target_m) + " is below verifier m = " +
            std::to_string(v->m()));
    }
    VerifierPtr out = v;
    for (int k = v->m(); k < target_m; k++) {
        out = pad_with_suffix_rule(out, 1);
    }
    return out;
}

DualVerifierPair equalize_pair(const VerifierPtr &v0, const VerifierPtr &v1) {
    int m = std::max(v0->m(), v1->m());
    return make_dual_pair(equalize_branch_lengths(v0, m), equalize_branch_lengths(v1, m));
}

DualVerifierPair make_dual_lwpp(const VerifierPtr &base, const HalfGapFunction &h_fn) {
    const int n = base->n();
    const int m = base->m();
    const BigInt h_big = h_fn(n);
    const std::int64_t half = std::int64_t{1} << (m - 1);
    if (h_big < 1 || h_big > half) {
        throw PreconditionError(
            "make_dual_lwpp: h(" + std::to_string(n) + ") = " + h_big.str() + " must lie in [1, 2^(m-1)] = [1, " +
                std::to_string(half) + "]",
            std::to_string(n));
    }
    const auto h = h_big.convert_to<std::int64_t>();
    for (const auto &x : all_inputs(n)) {
        auto g = gap_stats(*base, x);
        if (g.delta != 0 && g.delta != h) {
            throw PreconditionError(
                "make_dual_lwpp: base verifier " + base->name() + " has half-gap " + std::to_string(g.delta) +
                    " at x = " + x.str() + ", outside {0, " + std::to_string(h) + "}",
                x.str());
        }
    }

    const std::uint64_t threshold = static_cast<std::uint64_t>(half + h);
    auto v0 = make_verifier(
        n,
        m + 1,
        [base, m, threshold](const BitString &x, const BitString &b) {
            BitString rest = b.slice(1, m);
            if (!b[0]) {
                return rest.bits >= threshold;
            }
            return !(*base)(x, rest);
        },
        VerifierBacking::Composite,
        base->name() + "/lwpp0");
    auto v1 = make_verifier(
        n,
        m + 1,
        [base, m](const BitString &x, const BitString &b) {
            BitString rest = b.slice(1, m);
            if (!b[0]) {
                return rest[0];
            }
            return (*base)(x, rest);
        },
        VerifierBacking::Composite,
        base->name() + "/lwpp1");
    return make_dual_pair(std::move(v0), std::move(v1), h_fn);
}

}  // namespace qqc
