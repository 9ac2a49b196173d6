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

#include "qqc/verifierkit/catalog.h"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <random>

#include "qqc/errors.h"
#include "qqc/verifierkit/gap.h"
#include "qqc/verifierkit/lemmas.h"

namespace qqc {

namespace {

bool parity(std::uint64_t v) {
    return (std::popcount(v) & 1) == 1;
}

// Pairs with m = 2 whose nonzero half-gap is always 2 = 2^(m-1), built from a
// membership predicate: the vanishing side accepts on b[0], the live side
// never accepts.
DualVerifierPair half_or_nothing(int n, const std::string &name, std::function<bool(const BitString &)> in_language) {
    constexpr int m = 2;
    auto v0 = make_verifier(
        n,
        m,
        [in_language](const BitString &x, const BitString &b) {
            return in_language(x) && b[0];
        },
        VerifierBacking::Builtin,
        name + "/v0");
    auto v1 = make_verifier(
        n,
        m,
        [in_language](const BitString &x, const BitString &b) {
            return !in_language(x) && b[0];
        },
        VerifierBacking::Builtin,
        name + "/v1");
    return make_dual_pair(std::move(v0), std::move(v1), HalfGapFunction::power(2, Affine{0, 1}));
}

std::vector<ProblemFamily> make_catalog() {
    std::vector<ProblemFamily> out;
    out.push_back(ProblemFamily{
        "ALLZERO",
        "L = {0^n}; dual LWPP pair derived from parity(x & b) with h(n) = 2^(n-1)",
        1,
        30,
        [](const BitString &x) {
            return x.is_zero();
        },
        [](int n) {
            return make_dual_lwpp(allzero_base(n), allzero_half_gap());
        },
    });
    out.push_back(ProblemFamily{
        "EMPTY",
        "L = {} (no YES instances), m = 2",
        1,
        59,
        [](const BitString &) {
            return false;
        },
        [](int n) {
            return half_or_nothing(n, "EMPTY", [](const BitString &) {
                return false;
            });
        },
    });
    out.push_back(ProblemFamily{
        "FULL",
        "L = {0,1}^n (every input is YES), m = 2",
        1,
        59,
        [](const BitString &) {
            return true;
        },
        [](int n) {
            return half_or_nothing(n, "FULL", [](const BitString &) {
                return true;
            });
        },
    });
    out.push_back(ProblemFamily{
        "PARITY",
        "L = {x : x has odd parity}, m = 2",
        1,
        59,
        [](const BitString &x) {
            return parity(x.bits);
        },
        [](int n) {
            return half_or_nothing(n, "PARITY", [](const BitString &x) {
                return parity(x.bits);
            });
        },
    });
    out.push_back(ProblemFamily{
        "FIRSTBIT",
        "L = {x : x[0] = 1}; dual LWPP pair derived from x[0] ? 0 : b[0] with m = n, h(n) = 2^(n-1)",
        1,
        30,
        [](const BitString &x) {
            return x[0];
        },
        [](int n) {
            auto base = make_verifier(
                n,
                n,
                [](const BitString &x, const BitString &b) {
                    return !x[0] && b[0];
                },
                VerifierBacking::Builtin,
                "FIRSTBIT/base");
            return make_dual_lwpp(base, HalfGapFunction::power(2, Affine{1, -1}));
        },
    });
    return out;
}

std::string upper(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
        return static_cast<char>(std::toupper(c));
    });
    return out;
}

// Bounded draw without relying on implementation-defined distributions, so a
// seed reproduces the same tables on every platform.
std::uint64_t draw(std::mt19937_64 &rng, std::uint64_t bound) {
    return rng() % bound;
}

std::vector<std::string> random_subset(std::mt19937_64 &rng, int m, std::uint64_t count) {
    std::vector<std::uint64_t> branches(std::size_t{1} << m);
    std::iota(branches.begin(), branches.end(), std::uint64_t{0});
    for (std::size_t k = branches.size(); k > 1; k--) {
        std::swap(branches[k - 1], branches[draw(rng, k)]);
    }
    branches.resize(count);
    std::sort(branches.begin(), branches.end());
    std::vector<std::string> out;
    for (auto b : branches) {
        out.push_back(BitString(b, m).str());
    }
    return out;
}

}  // namespace

const std::vector<ProblemFamily> &builtin_problems() {
    static const std::vector<ProblemFamily> catalog = make_catalog();
    return catalog;
}

const ProblemFamily *find_builtin(std::string_view name) {
    auto key = upper(name);
    for (const auto &p : builtin_problems()) {
        if (p.name == key) {
            return &p;
        }
    }
    return nullptr;
}

VerifierPtr allzero_base(int n) {
    return make_verifier(
        n,
        n,
        [](const BitString &x, const BitString &b) {
            return parity(x.bits & b.bits);
        },
        VerifierBacking::Builtin,
        "ALLZERO/base");
}

HalfGapFunction allzero_half_gap() {
    return HalfGapFunction::power(2, Affine{1, -1});
}

DualVerifierPair random_dual_pair(int n, int m, std::uint64_t seed) {
    if (n < 0 || m < 1 || n > 12 || m > 16) {
        throw UsageError("random_dual_pair: need 0 <= n <= 12 and 1 <= m <= 16");
    }
    std::mt19937_64 rng(seed);
    const std::uint64_t branches = std::uint64_t{1} << m;
    const std::uint64_t half = branches / 2;
    for (int attempt = 0; attempt < 64; attempt++) {
        TruthTable t0{n, m, {}};
        TruthTable t1{n, m, {}};
        for (const auto &x : all_inputs(n)) {
            bool yes = draw(rng, 2) == 1;
            // Any accept count except exactly half gives a nonzero gap.
            std::uint64_t live = draw(rng, branches);
            if (live >= half) {
                live++;
            }
            t0.table[x.str()] = random_subset(rng, m, yes ? half : live);
            t1.table[x.str()] = random_subset(rng, m, yes ? live : half);
        }
        auto tag = "RANDOM(seed=" + std::to_string(seed) + ")";
        auto pair = make_dual_pair(verifier_from_table(t0, tag + "/v0"), verifier_from_table(t1, tag + "/v1"));
        try {
            dual_sweep(pair);
            return pair;
        } catch (const PreconditionError &) {
            continue;
        }
    }
    throw std::logic_error("random_dual_pair: generator failed to produce a dual pair");
}

LwppBase random_lwpp_base(int n, int m, std::uint64_t seed) {
    if (n < 0 || m < 1 || n > 12 || m > 16) {
        throw UsageError("random_lwpp_base: need 0 <= n <= 12 and 1 <= m <= 16");
    }
    std::mt19937_64 rng(seed);
    const std::uint64_t half = std::uint64_t{1} << (m - 1);
    const std::uint64_t h = 1 + draw(rng, half);
    TruthTable table{n, m, {}};
    for (const auto &x : all_inputs(n)) {
        bool yes = draw(rng, 2) == 1;
        // Half-gap h means R = 2^(m-1) + h, i.e. A = 2^(m-1) - h.
        table.table[x.str()] = random_subset(rng, m, yes ? half - h : half);
    }
    auto base = verifier_from_table(table, "RANDOM-LWPP(seed=" + std::to_string(seed) + ")/base");
    return LwppBase{base, HalfGapFunction::tabulated({{n, BigInt(h)}})};
}

}  // namespace qqc
