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

#include <random>

#include "gtest/gtest.h"
#include "qqc/errors.h"
#include "qqc/verifierkit/catalog.h"
#include "qqc/verifierkit/gap.h"
#include "qqc/verifierkit/lemmas.h"

using namespace qqc;

namespace {

VerifierPtr constant(int n, int m, bool value) {
    return make_verifier(
        n, m, [value](const BitString &, const BitString &) { return value; }, VerifierBacking::Builtin,
        value ? "accept" : "reject");
}

/// (R - A) / 2 by direct enumeration, kept separate from gap_stats.
std::int64_t brute_half_gap(const Verifier &v, const BitString &x) {
    std::int64_t diff = 0;
    for (std::uint64_t b = 0; b < (1ull << v.m()); b++) {
        diff += v(x, BitString(b, v.m())) ? -1 : 1;
    }
    return diff / 2;
}

/// Verifiers used for the lemma sweeps: n, m <= 4.
std::vector<VerifierPtr> test_verifiers() {
    std::vector<VerifierPtr> out;
    for (int n = 1; n <= 4; n++) {
        for (int m = 1; m <= 4; m++) {
            out.push_back(constant(n, m, false));
            out.push_back(constant(n, m, true));
            out.push_back(make_verifier(
                n, m, [](const BitString &x, const BitString &b) { return x[0] != b[b.width - 1]; },
                VerifierBacking::Builtin, "x0^blast"));
            std::mt19937_64 rng(static_cast<std::uint64_t>(n * 10 + m));
            TruthTable t{n, m, {}};
            for (const auto &x : all_inputs(n)) {
                for (const auto &b : all_inputs(m)) {
                    if (rng() & 1) {
                        t.table[x.str()].push_back(b.str());
                    }
                }
            }
            out.push_back(verifier_from_table(t, "table"));
        }
    }
    out.push_back(allzero_base(2));
    out.push_back(allzero_base(3));
    return out;
}

}  // namespace

TEST(gap_stats, constant_verifiers) {
    auto reject = gap_stats(*constant(1, 3, false), BitString::parse("0"));
    ASSERT_EQ(reject.accept, 0);
    ASSERT_EQ(reject.reject, 8);
    ASSERT_EQ(reject.delta, 4);
    ASSERT_EQ(reject.delta_amp, Amplitude::half());
    ASSERT_EQ(reject.rho, Amplitude(1));
    ASSERT_EQ(reject.alpha, Amplitude());

    auto accept = gap_stats(*constant(1, 3, true), BitString::parse("1"));
    ASSERT_EQ(accept.delta, -4);
    ASSERT_EQ(accept.delta_amp, -Amplitude::half());
}

TEST(gap_stats, allzero_base) {
    auto v = allzero_base(2);
    auto g00 = gap_stats(*v, BitString::parse("00"));
    ASSERT_EQ(g00.accept, 0);
    ASSERT_EQ(g00.reject, 4);
    ASSERT_EQ(g00.delta, 2);
    ASSERT_EQ(g00.delta_amp, Amplitude::half());
    auto g01 = gap_stats(*v, BitString::parse("01"));
    ASSERT_EQ(g01.accept, 2);
    ASSERT_EQ(g01.reject, 2);
    ASSERT_EQ(g01.delta, 0);
    ASSERT_EQ(g01.delta_amp, Amplitude());
}

TEST(gap_stats, invariants_on_test_verifiers) {
    for (const auto &v : test_verifiers()) {
        for (const auto &x : all_inputs(v->n())) {
            auto g = gap_stats(*v, x);
            ASSERT_EQ(g.accept + g.reject, 1ll << v->m());
            ASSERT_EQ(g.delta, g.reject - (1ll << (v->m() - 1)));
            ASSERT_EQ(g.delta, brute_half_gap(*v, x));
            ASSERT_EQ(g.delta_amp, Amplitude::dyadic(g.delta, static_cast<std::uint32_t>(v->m())));
            if (g.delta != 0) {
                ASSERT_FALSE(less_than(g.delta_amp * g.delta_amp, Amplitude::dyadic(1, 2 * v->m())));
            }
        }
    }
}

TEST(gap_stats, json_round_trip) {
    auto g = gap_stats(*allzero_base(3), BitString::parse("000"));
    nlohmann::json j = g;
    ASSERT_EQ(j.at("Delta"), 4);
    ASSERT_EQ(nlohmann::json::parse(j.dump()).get<GapStats>(), g);
}

TEST(lemmas, padding_doubles_the_half_gap) {
    auto padded = equalize_branch_lengths(allzero_base(2), 3);
    ASSERT_EQ(padded->m(), 3);
    ASSERT_EQ(gap_stats(*padded, BitString::parse("00")).delta, 4);

    auto r = equalize_branch_lengths(constant(1, 1, false), 2);
    for (const auto &x : all_inputs(1)) {
        ASSERT_EQ(gap_stats(*r, x).delta, 2 * gap_stats(*constant(1, 1, false), x).delta);
    }
}

TEST(lemmas, padding_by_zero_bits_is_identity) {
    auto v = allzero_base(2);
    auto same = equalize_branch_lengths(v, 2);
    for (const auto &x : all_inputs(2)) {
        ASSERT_EQ(gap_stats(*same, x), gap_stats(*v, x));
    }
    ASSERT_THROW(equalize_branch_lengths(v, 1), UsageError);
}

TEST(lemmas, each_padding_bit_doubles_delta) {
    for (const auto &v : test_verifiers()) {
        for (int extra = 1; extra <= 2; extra++) {
            auto padded = equalize_branch_lengths(v, v->m() + extra);
            auto suffix = pad_with_suffix_rule(v, extra);
            for (const auto &x : all_inputs(v->n())) {
                std::int64_t delta = brute_half_gap(*v, x);
                ASSERT_EQ(brute_half_gap(*padded, x), delta << extra);
                ASSERT_EQ(brute_half_gap(*suffix, x), 2 * delta);
            }
        }
    }
}

TEST(lemmas, equalize_pair) {
    auto pair = equalize_pair(allzero_base(2), constant(2, 4, false));
    ASSERT_EQ(pair.v0->m(), 4);
    ASSERT_EQ(pair.v1->m(), 4);
    ASSERT_EQ(gap_stats(*pair.v0, BitString::parse("00")).delta, 8);
}

TEST(lemmas, make_dual_lwpp_on_allzero) {
    auto pair = make_dual_lwpp(allzero_base(2), allzero_half_gap());
    ASSERT_EQ(pair.m(), 3);
    auto g00 = dual_entry(pair, BitString::parse("00"));
    ASSERT_EQ(g00.answer, 1);
    ASSERT_EQ(g00.g1.delta_amp, Amplitude::dyadic(2, 3));
    ASSERT_TRUE(g00.g0.delta_amp.is_zero());
    auto g01 = dual_entry(pair, BitString::parse("01"));
    ASSERT_EQ(g01.answer, 0);
    ASSERT_FALSE(g01.g0.delta_amp.is_zero());
    ASSERT_TRUE(g01.g1.delta_amp.is_zero());
}

TEST(lemmas, make_dual_lwpp_rejects_broken_promise) {
    auto h = HalfGapFunction::tabulated({{2, BigInt(1)}});
    try {
        make_dual_lwpp(constant(2, 2, false), h);
        FAIL() << "expected PreconditionError";
    } catch (const PreconditionError &e) {
        ASSERT_EQ(e.witness, "00");
    }
    auto too_big = HalfGapFunction::tabulated({{2, BigInt(3)}});
    ASSERT_THROW(make_dual_lwpp(allzero_base(2), too_big), PreconditionError);
}

TEST(lemmas, make_dual_lwpp_on_random_bases) {
    for (std::uint64_t seed = 0; seed < 40; seed++) {
        int n = 1 + static_cast<int>(seed % 3);
        int m = 1 + static_cast<int>(seed % 4);
        auto base = random_lwpp_base(n, m, seed);
        auto pair = make_dual_lwpp(base.base, base.h);
        auto target = Amplitude::dyadic(base.h(n), static_cast<std::uint32_t>(pair.m()));
        for (const auto &x : all_inputs(n)) {
            auto g0 = gap_stats(*pair.v0, x);
            auto g1 = gap_stats(*pair.v1, x);
            ASSERT_TRUE((g0.delta_amp * g1.delta_amp).is_zero());
            ASSERT_FALSE((g0.delta_amp + g1.delta_amp).is_zero());
            ASSERT_EQ(g0.delta_amp + g1.delta_amp, target);
            ASSERT_EQ(g1.delta, brute_half_gap(*base.base, x));
        }
    }
}

TEST(catalog, builtins_are_dual) {
    for (const auto &family : builtin_problems()) {
        for (int n = std::max(1, family.min_n); n <= std::min(3, family.max_n); n++) {
            auto pair = family.build(n);
            for (const auto &entry : dual_sweep(pair)) {
                ASSERT_EQ(entry.answer, family.language(entry.x) ? 1 : 0) << family.name << " " << entry.x.str();
            }
        }
    }
    auto empty = find_builtin("empty")->build(2);
    for (const auto &entry : dual_sweep(empty)) {
        ASSERT_TRUE(entry.g1.delta_amp.is_zero());
    }
    ASSERT_EQ(find_builtin("nope"), nullptr);
}

TEST(catalog, random_pairs_are_dual_and_seeded) {
    for (std::uint64_t seed = 0; seed < 50; seed++) {
        auto pair = random_dual_pair(2, 3, seed);
        ASSERT_EQ(dual_sweep(pair).size(), 4u);
        auto again = random_dual_pair(2, 3, seed);
        for (const auto &x : all_inputs(2)) {
            ASSERT_EQ(gap_stats(*pair.v0, x).delta, gap_stats(*again.v0, x).delta);
        }
    }
}

TEST(verifier, truth_table_round_trip) {
    auto v = allzero_base(2);
    TruthTable t = tabulate(*v);
    nlohmann::json j = t;
    TruthTable back = nlohmann::json::parse(j.dump()).get<TruthTable>();
    ASSERT_EQ(back, t);
    auto w = verifier_from_table(back, "copy");
    for (const auto &x : all_inputs(2)) {
        for (const auto &b : all_inputs(2)) {
            ASSERT_EQ((*w)(x, b), (*v)(x, b));
        }
    }
    ASSERT_THROW((*v)(BitString::parse("0"), BitString::parse("00")), UsageError);
}

TEST(verifier, half_gap_function) {
    auto h = allzero_half_gap();
    ASSERT_EQ(h(1), 1);
    ASSERT_EQ(h(3), 4);
    ASSERT_EQ(h.shifted(1)(3), 5);
    nlohmann::json j = h;
    ASSERT_EQ(j.get<HalfGapFunction>(), h);
    auto t = HalfGapFunction::tabulated({{2, BigInt(6)}});
    nlohmann::json jt = t.shifted(-1);
    ASSERT_EQ(jt.get<HalfGapFunction>(), t.shifted(-1));
    ASSERT_THROW(t(3), PreconditionError);
}
