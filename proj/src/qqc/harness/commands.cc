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

#include "qqc/harness/commands.h"

#include "qqc/errors.h"
#include "qqc/harness/sweep.h"

namespace qqc {

namespace {

int resolve_n(const ProblemSpec &spec, const CommandOptions &options) {
    if (!options.input.empty()) {
        int width = BitString::parse(options.input).width;
        if (options.n.has_value() && *options.n != width) {
            throw UsageError(
                "--input '" + options.input + "' has length " + std::to_string(width) + " but --n is " +
                std::to_string(*options.n));
        }
        return width;
    }
    if (options.n.has_value()) {
        return *options.n;
    }
    if (spec.n_min == spec.n_max) {
        return spec.n_min;
    }
    throw UsageError("give --n or --input (problem " + spec.name + " covers several lengths)");
}

DualVerifierPair build_guarded(
    const ProblemSpec &spec, int n, const CommandOptions &options, std::vector<std::string> *transforms = nullptr) {
    DualVerifierPair pair = spec.build(n, transforms);
    if (n + pair.m() > kDeskScaleLimit && !options.force_large) {
        throw UsageError(
            "n + m = " + std::to_string(n + pair.m()) + " exceeds the desk-scale limit of " +
            std::to_string(kDeskScaleLimit) + "; pass --force-large to run anyway");
    }
    return pair;
}

std::vector<BitString> inputs_for(int n, const CommandOptions &options) {
    if (!options.input.empty()) {
        return {BitString::parse(options.input)};
    }
    return all_inputs(n);
}

HalfGapFunction effective_h(const DualVerifierPair &pair, const CommandOptions &options) {
    if (!pair.h.has_value()) {
        throw UsageError("the problem has no half-gap function h; the lwpp and lpwpp deciders need one");
    }
    return options.h_offset == 0 ? *pair.h : pair.h->shifted(BigInt(options.h_offset));
}

/// (M, t) with h(n) = M^t: read off a power-form h, else base 2.
std::pair<BigInt, std::int64_t> power_form(const HalfGapFunction &h, int n) {
    if (h.kind == HalfGapFunction::Kind::Power) {
        return {h.base, h.exponent(n)};
    }
    BigInt value = h(n);
    std::int64_t t = 0;
    BigInt rest = value;
    while (rest > 1 && (rest & 1) == 0) {
        rest >>= 1;
        t++;
    }
    if (rest != 1) {
        throw PreconditionError(
            "h(" + std::to_string(n) + ") = " + value.str() + " is not a power of 2; give h as a power {M, t}",
            std::to_string(n));
    }
    return {BigInt(2), t};
}

void add_seed(nlohmann::json &j, const ProblemSpec &spec) {
    if (spec.seed.has_value()) {
        j["seed"] = *spec.seed;
    }
}

nlohmann::json error_json(const std::exception &e) {
    nlohmann::json j{{"message", e.what()}};
    if (const auto *m = dynamic_cast<const MismatchError *>(&e)) {
        j["kind"] = "mismatch";
        j["term"] = m->term;
    } else if (const auto *p = dynamic_cast<const PreconditionError *>(&e)) {
        j["kind"] = "precondition";
        j["witness"] = p->witness;
    } else {
        j["kind"] = "error";
    }
    return j;
}

}  // namespace

const std::vector<std::string> &construction_names() {
    static const std::vector<std::string> names{"un", "fig3-zqp", "fig3-post", "wn", "lwpp", "lpwpp"};
    return names;
}

nlohmann::json gap_report_to_json(const GapReport &report) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto &e : report.entries) {
        entries.push_back({
            {"x", e.x.str()},
            {"stats", e.stats},
            {"answer", e.answer.has_value() ? nlohmann::json(*e.answer) : nlohmann::json(nullptr)},
        });
    }
    nlohmann::json j{{"problem", report.problem}, {"n", report.n}, {"m", report.m}, {"entries", entries}};
    if (report.seed.has_value()) {
        j["seed"] = *report.seed;
    }
    return j;
}

GapReport gap_report_from_json(const nlohmann::json &j) {
    try {
        GapReport r;
        r.problem = j.at("problem").get<std::string>();
        r.n = j.at("n").get<int>();
        r.m = j.at("m").get<int>();
        if (j.contains("seed")) {
            r.seed = j.at("seed").get<std::uint64_t>();
        }
        for (const auto &e : j.at("entries")) {
            GapReportEntry entry;
            entry.x = BitString::parse(e.at("x").get<std::string>());
            entry.stats = e.at("stats").get<std::vector<GapStats>>();
            if (!e.at("answer").is_null()) {
                entry.answer = e.at("answer").get<int>();
            }
            r.entries.push_back(std::move(entry));
        }
        return r;
    } catch (const nlohmann::json::exception &e) {
        throw SpecError(std::string("gap report JSON: ") + e.what());
    }
}

Circuit build_construction(
    const std::string &construction, const DualVerifierPair &pair, int n, const CommandOptions &options) {
    if (construction == "un") {
        return build_un(pair, n);
    }
    if (construction == "fig3-zqp") {
        return build_fig3(pair, n, FlagDamping::b_power());
    }
    if (construction == "fig3-post") {
        return build_fig3(pair, n, FlagDamping::project());
    }
    if (construction == "wn") {
        return build_wn(pair, n);
    }
    if (construction == "lwpp") {
        return build_lwpp_decider(pair, effective_h(pair, options), n);
    }
    if (construction == "lpwpp") {
        HalfGapFunction h = effective_h(pair, options);
        auto [base, t] = power_form(*pair.h, n);
        return build_lpwpp_decider(pair, h, base, t, n);
    }
    throw UsageError("unknown construction '" + construction + "'");
}

RunOutcome run_construction(
    const std::string &construction,
    const DualVerifierPair &pair,
    const BitString &x,
    const CommandOptions &options) {
    RunOptions ro{options.checkpoints};
    RunOutcome out;
    if (construction == "un") {
        out = run_un(pair, x, ro);
    } else if (construction == "fig3-zqp") {
        out = run_zqp(pair, x, ro);
    } else if (construction == "fig3-post") {
        out = run_posteqp(pair, x, ro);
    } else if (construction == "wn") {
        out = run_wn(pair, x, ro);
    } else if (construction == "lwpp") {
        out = run_lwpp(pair, effective_h(pair, options), x, ro);
    } else if (construction == "lpwpp") {
        HalfGapFunction h = effective_h(pair, options);
        auto [base, t] = power_form(*pair.h, x.width);
        out = run_lpwpp(pair, h, base, t, x, ro);
    } else {
        throw UsageError("unknown construction '" + construction + "'");
    }
    bool agrees = out.answer.has_value() && *out.answer == out.expected_answer;
    out.checks.push_back(CheckResult{
        "answer = L(x)", agrees,
        agrees ? "" : "answer " + (out.answer.has_value() ? std::to_string(*out.answer) : std::string("none")) +
                          ", oracle " + std::to_string(out.expected_answer)});
    return out;
}

CommandResult command_gap(const ProblemSpec &spec, const CommandOptions &options) {
    int n = resolve_n(spec, options);
    DualVerifierPair pair = build_guarded(spec, n, options);
    GapReport report;
    report.problem = spec.name;
    report.n = n;
    report.m = pair.m();
    report.seed = spec.seed;
    auto inputs = inputs_for(n, options);
    report.entries = parallel_map<GapReportEntry>(inputs.size(), [&](size_t k) {
        GapReportEntry e;
        e.x = inputs[k];
        e.stats.push_back(gap_stats(*pair.v0, e.x));
        if (spec.dual != DualKind::Single) {
            e.stats.push_back(gap_stats(*pair.v1, e.x));
            bool zero0 = e.stats[0].delta == 0;
            bool zero1 = e.stats[1].delta == 0;
            if (zero0 != zero1) {
                e.answer = zero0 ? 1 : 0;
            }
        }
        return e;
    });
    return CommandResult{0, gap_report_to_json(report)};
}

CommandResult command_simulate(const ProblemSpec &spec, const CommandOptions &options) {
    if (options.input.empty()) {
        throw UsageError("simulate needs --input");
    }
    BitString x = BitString::parse(options.input);
    int n = resolve_n(spec, options);
    DualVerifierPair pair = build_guarded(spec, n, options);
    std::string construction = options.construction.empty() ? "un" : options.construction;
    nlohmann::json report;
    int exit_code = 0;
    try {
        RunOutcome out = run_construction(construction, pair, x, options);
        report = outcome_to_json(out, options.dump_state, options.checkpoints);
        exit_code = out.passed() ? 0 : 1;
    } catch (const MismatchError &e) {
        report = {{"construction", construction}, {"x", x.str()}, {"passed", false}, {"error", error_json(e)}};
        exit_code = 1;
    } catch (const PreconditionError &e) {
        report = {{"construction", construction}, {"x", x.str()}, {"passed", false}, {"error", error_json(e)}};
        exit_code = 1;
    }
    report["problem"] = spec.name;
    add_seed(report, spec);
    if (options.h_offset != 0) {
        report["h_offset"] = options.h_offset;
    }
    if (options.dump_circuit) {
        report["circuit"] = circuit_to_json(build_construction(construction, pair, n, options));
    }
    return CommandResult{exit_code, report};
}

CommandResult command_verify(const ProblemSpec &spec, const CommandOptions &options) {
    int n = resolve_n(spec, options);
    DualVerifierPair pair = build_guarded(spec, n, options);
    std::vector<std::string> constructions;
    if (options.construction.empty() || options.construction == "all") {
        constructions = construction_names();
    } else {
        constructions.push_back(options.construction);
    }
    auto inputs = inputs_for(n, options);
    nlohmann::json sections = nlohmann::json::array();
    bool all_passed = true;
    for (const auto &construction : constructions) {
        if ((construction == "lwpp" || construction == "lpwpp") && !pair.h.has_value()) {
            throw UsageError("construction " + construction + " needs a half-gap function h; problem " + spec.name +
                             " has none");
        }
        auto rows = parallel_map<nlohmann::json>(inputs.size(), [&](size_t k) {
            const BitString &x = inputs[k];
            nlohmann::json row{{"x", x.str()}};
            try {
                RunOutcome out = run_construction(construction, pair, x, options);
                row["passed"] = out.passed();
                row["verdict"] = verdict_name(out.verdict);
                row["answer"] = out.answer.has_value() ? nlohmann::json(*out.answer) : nlohmann::json(nullptr);
                row["expected"] = out.expected_answer;
                nlohmann::json failed = nlohmann::json::array();
                for (const auto &c : out.checks) {
                    if (!c.passed) {
                        failed.push_back({{"name", c.name}, {"detail", c.detail}});
                    }
                }
                if (!failed.empty()) {
                    row["failed_checks"] = failed;
                }
            } catch (const MismatchError &e) {
                row["passed"] = false;
                row["error"] = error_json(e);
            } catch (const PreconditionError &e) {
                row["passed"] = false;
                row["error"] = error_json(e);
            }
            return row;
        });
        nlohmann::json failures = nlohmann::json::array();
        for (const auto &row : rows) {
            if (!row.at("passed").get<bool>()) {
                failures.push_back(row.at("x"));
            }
        }
        all_passed &= failures.empty();
        sections.push_back({
            {"construction", construction},
            {"total", rows.size()},
            {"passed", rows.size() - failures.size()},
            {"failures", failures},
            {"inputs", rows},
        });
    }
    nlohmann::json report{
        {"problem", spec.name},
        {"n", n},
        {"m", pair.m()},
        {"constructions", sections},
        {"passed", all_passed},
    };
    add_seed(report, spec);
    if (options.h_offset != 0) {
        report["h_offset"] = options.h_offset;
    }
    return CommandResult{all_passed ? 0 : 1, report};
}

CommandResult command_duals(const ProblemSpec &spec, const CommandOptions &options) {
    std::vector<int> lengths;
    if (options.n.has_value() || !options.input.empty()) {
        lengths.push_back(resolve_n(spec, options));
    } else {
        for (int n = spec.n_min; n <= spec.n_max; n++) {
            lengths.push_back(n);
        }
    }
    nlohmann::json sections = nlohmann::json::array();
    bool all_valid = true;
    for (int n : lengths) {
        std::vector<std::string> transforms;
        DualVerifierPair pair = build_guarded(spec, n, options, &transforms);
        std::optional<Amplitude> target;
        std::optional<BigInt> hn;
        if (pair.h.has_value()) {
            hn = effective_h(pair, options)(n);
            target = Amplitude::dyadic(*hn, static_cast<std::uint32_t>(pair.m()));
        }
        auto inputs = inputs_for(n, options);
        auto rows = parallel_map<nlohmann::json>(inputs.size(), [&](size_t k) {
            const BitString &x = inputs[k];
            GapStats g0 = gap_stats(*pair.v0, x);
            GapStats g1 = gap_stats(*pair.v1, x);
            bool product_zero = (g0.delta_amp * g1.delta_amp).is_zero();
            bool one_nonzero = (g0.delta == 0) != (g1.delta == 0);
            nlohmann::json row{
                {"x", x.str()},
                {"Delta0", g0.delta},
                {"Delta1", g1.delta},
                {"delta0", g0.delta_amp},
                {"delta1", g1.delta_amp},
                {"product_zero", product_zero},
                {"exactly_one_nonzero", one_nonzero},
            };
            bool valid = product_zero && one_nonzero;
            if (one_nonzero) {
                int answer = g0.delta == 0 ? 1 : 0;
                row["answer"] = answer;
                if (target.has_value()) {
                    bool matches = (answer ? g1.delta_amp : g0.delta_amp) == *target;
                    row["matches_h"] = matches;
                    valid &= matches;
                }
            }
            row["valid"] = valid;
            return row;
        });
        bool valid = true;
        for (const auto &row : rows) {
            valid &= row.at("valid").get<bool>();
        }
        all_valid &= valid;
        nlohmann::json section{
            {"n", n},
            {"m", pair.m()},
            {"transforms", transforms},
            {"inputs", rows},
            {"valid", valid},
        };
        if (hn.has_value()) {
            section["h"] = hn->str();
        }
        sections.push_back(section);
    }
    nlohmann::json report{{"problem", spec.name}, {"lengths", sections}, {"valid", all_valid}};
    add_seed(report, spec);
    return CommandResult{all_valid ? 0 : 1, report};
}

}  // namespace qqc
