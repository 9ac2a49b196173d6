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

#include "qqc/verifierkit/gap.h"

#include "qqc/errors.h"

namespace qqc {

GapStats gap_stats(const Verifier &v, const BitString &x) {
    if (x.width != v.n()) {
        throw UsageError(
            "gap_stats: input '" + x.str() + "' has length " + std::to_string(x.width) + ", verifier " + v.name() +
            " expects n = " + std::to_string(v.n()));
    }
    if (v.m() > 40) {
        throw UsageError("gap_stats: refusing to enumerate 2^" + std::to_string(v.m()) + " branches");
    }
    const std::uint64_t branches = std::uint64_t{1} << v.m();
    std::int64_t accept = 0;
    std::int64_t reject = 0;
    for (std::uint64_t b = 0; b < branches; b++) {
        if (v(x, BitString(b, v.m()))) {
            accept++;
        } else {
            reject++;
        }
    }
    const auto total = static_cast<std::int64_t>(branches);
    if (accept + reject != total) {
        throw std::logic_error("gap_stats: A + R != 2^m");
    }
    // Difference form and offset form of the half-gap must agree.
    std::int64_t from_difference = (reject - accept) / 2;
    std::int64_t from_offset = reject - total / 2;
    if ((reject - accept) % 2 != 0 || from_difference != from_offset) {
        throw std::logic_error("gap_stats: half-gap forms disagree");
    }

    GapStats out;
    out.verifier = v.name();
    out.x = x;
    out.m = v.m();
    out.accept = accept;
    out.reject = reject;
    out.delta = from_difference;
    auto m = static_cast<std::uint32_t>(v.m());
    out.alpha = Amplitude::dyadic(accept, m);
    out.rho = Amplitude::dyadic(reject, m);
    out.delta_amp = Amplitude::dyadic(from_difference, m);
    return out;
}

void to_json(nlohmann::json &j, const GapStats &g) {
    j = nlohmann::json{
        {"verifier", g.verifier},
        {"x", g.x.str()},
        {"m", g.m},
        {"A", g.accept},
        {"R", g.reject},
        {"Delta", g.delta},
        {"alpha", g.alpha},
        {"rho", g.rho},
        {"delta", g.delta_amp},
    };
}

void from_json(const nlohmann::json &j, GapStats &g) {
    try {
        g.verifier = j.at("verifier").get<std::string>();
        g.x = BitString::parse(j.at("x").get<std::string>());
        g.m = j.at("m").get<int>();
        g.accept = j.at("A").get<std::int64_t>();
        g.reject = j.at("R").get<std::int64_t>();
        g.delta = j.at("Delta").get<std::int64_t>();
        g.alpha = j.at("alpha").get<Amplitude>();
        g.rho = j.at("rho").get<Amplitude>();
        g.delta_amp = j.at("delta").get<Amplitude>();
    } catch (const nlohmann::json::exception &e) {
        throw SpecError(std::string("gap report JSON: ") + e.what());
    } catch (const UsageError &e) {
        throw SpecError(std::string("gap report JSON: ") + e.what());
    }
}

DualEntry dual_entry(const DualVerifierPair &pair, const BitString &x) {
    DualEntry e;
    e.x = x;
    e.g0 = gap_stats(*pair.v0, x);
    e.g1 = gap_stats(*pair.v1, x);
    bool zero0 = e.g0.delta == 0;
    bool zero1 = e.g1.delta == 0;
    if (zero0 == zero1) {
        throw PreconditionError(
            "pair is not dual at x = " + x.str() + ": Delta0 = " + std::to_string(e.g0.delta) +
                ", Delta1 = " + std::to_string(e.g1.delta),
            x.str());
    }
    e.answer = zero0 ? 1 : 0;
    return e;
}

std::vector<BitString> all_inputs(int n) {
    if (n < 0 || n > 30) {
        throw UsageError("input length " + std::to_string(n) + " outside [0, 30]");
    }
    std::vector<BitString> out;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); v++) {
        out.emplace_back(v, n);
    }
    return out;
}

std::vector<DualEntry> dual_sweep(const DualVerifierPair &pair) {
    std::vector<DualEntry> out;
    for (const auto &x : all_inputs(pair.n())) {
        out.push_back(dual_entry(pair, x));
    }
    return out;
}

}  // namespace qqc
