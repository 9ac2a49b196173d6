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

#include "qqc/circuitgen/runs.h"

#include <functional>

#include "qqc/errors.h"

namespace qqc {

namespace {

constexpr const char *kVerdictNames[] = {"YES", "NO", "FAIL-branch-mass", "POSTSELECTED"};

BitString term_basis(const StateVector &state, std::uint64_t bits) {
    return BitString(bits, state.width());
}

Amplitude mass_where(const StateVector &state, const std::function<bool(const BitString &)> &keep) {
    Amplitude total;
    for (const auto &[bits, amp] : state.terms()) {
        if (keep(term_basis(state, bits))) {
            total += amp * amp;
        }
    }
    return total;
}

void add_check(RunOutcome &out, std::string name, bool passed, std::string detail = "") {
    out.checks.push_back(CheckResult{std::move(name), passed, std::move(detail)});
}

void add_equality_check(RunOutcome &out, std::string name, const StateVector &actual, const StateVector &expected) {
    bool same = actual == expected;
    std::string detail;
    if (!same) {
        StateVector diff = actual - expected;
        detail = "first differing term " + term_basis(diff, diff.terms().begin()->first).str() + "; actual - expected = " +
                 diff.str();
    }
    add_check(out, std::move(name), same, std::move(detail));
}

void add_amp_check(RunOutcome &out, std::string name, const Amplitude &actual, const Amplitude &expected) {
    bool same = actual == expected;
    add_check(out, std::move(name), same, same ? "" : "got " + actual.str() + ", expected " + expected.str());
}

/// U_n output on a layout without the s wire, computed by the circuit.
StateVector un_output(const DualVerifierPair &pair, const BitString &x) {
    return run_circuit(build_un(pair, x.width), x, false).final_state;
}

/// Appends `extra` zero wires on the right.
StateVector pad_zero_wires(const StateVector &state, int extra) {
    StateVector out(state.width() + extra);
    for (const auto &[bits, amp] : state.terms()) {
        out.add(concat(term_basis(state, bits), BitString(0, extra)), amp);
    }
    return out;
}

/// The four explicit b = 0^m terms of the U_n output, from the gap oracle.
StateVector un_explicit_terms(
    const Registers &regs, const BitString &x, const Amplitude &delta0, const Amplitude &delta1) {
    StateVector out(regs.width());
    BitString zero_b(0, regs.m);
    out.add(regs.basis(x, zero_b, false, false), Amplitude::half());
    out.add(regs.basis(x, zero_b, true, false), Amplitude::half());
    out.add(regs.basis(x, zero_b, false, true), delta0);
    out.add(regs.basis(x, zero_b, true, true), delta1);
    return out;
}

void set_verdict_from_support(RunOutcome &out, const StateVector &flagged, int answer_wire) {
    bool saw0 = false;
    bool saw1 = false;
    for (const auto &[bits, amp] : flagged.terms()) {
        (term_basis(flagged, bits)[answer_wire] ? saw1 : saw0) = true;
    }
    if (saw0 == saw1) {
        out.verdict = Verdict::FailBranchMass;
        out.answer.reset();
        return;
    }
    out.answer = saw1 ? 1 : 0;
    out.verdict = saw1 ? Verdict::Yes : Verdict::No;
}

StateVector filter(const StateVector &state, const std::function<bool(const BitString &)> &keep) {
    StateVector out(state.width());
    for (const auto &[bits, amp] : state.terms()) {
        BitString basis = term_basis(state, bits);
        if (keep(basis)) {
            out.add(basis, amp);
        }
    }
    return out;
}

RunOutcome start(const std::string &construction, const BitString &x, int expected_answer) {
    RunOutcome out;
    out.construction = construction;
    out.x = x;
    out.expected_answer = expected_answer;
    return out;
}

void finish_decider(RunOutcome &out, const Registers &regs, const BitString &x, const BigInt &hn) {
    const StateVector &state = out.final_state;
    BitString target = regs.basis(x, BitString(0, regs.m), true, false, out.expected_answer != 0);
    Amplitude expected_amp = Amplitude::dyadic(hn, static_cast<std::uint32_t>(regs.m));
    for (const auto &[bits, amp] : state.terms()) {
        BitString basis = term_basis(state, bits);
        if (basis != target) {
            throw MismatchError(
                "decider output is not a single basis term: residual " + amp.str() + " |" + basis.str() + ">",
                basis.str());
        }
    }
    Amplitude got = state.at(target);
    if (got != expected_amp) {
        throw MismatchError(
            "decider output amplitude " + got.str() + " differs from h(n)/2^m = " + expected_amp.str(), target.str());
    }
    add_check(out, "single basis term", state.size() == 1);
    add_amp_check(out, "amplitude = h(n)/2^m", got, expected_amp);
    out.answer = out.expected_answer;
    out.verdict = out.expected_answer ? Verdict::Yes : Verdict::No;
    out.success_mass = got * got;
    out.failure_mass = Amplitude{};
}

}  // namespace

std::string verdict_name(Verdict v) {
    return kVerdictNames[static_cast<int>(v)];
}

Verdict verdict_from_name(const std::string &name) {
    for (int k = 0; k < 4; k++) {
        if (name == kVerdictNames[k]) {
            return static_cast<Verdict>(k);
        }
    }
    throw SpecError("unknown verdict '" + name + "'");
}

bool RunOutcome::passed() const {
    for (const auto &c : checks) {
        if (!c.passed) {
            return false;
        }
    }
    return true;
}

const CheckResult *RunOutcome::find_check(const std::string &name) const {
    for (const auto &c : checks) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

RunOutcome run_un(const DualVerifierPair &pair, const BitString &x, const RunOptions &options) {
    Circuit circuit = build_un(pair, x.width);
    const Registers &regs = circuit.regs;
    GapStats g0 = gap_stats(*pair.v0, x);
    GapStats g1 = gap_stats(*pair.v1, x);
    RunOutcome out = start("un", x, g0.delta == 0 ? 1 : 0);
    Trace trace = run_circuit(circuit, x, options.record_checkpoints);
    out.final_state = trace.final_state;
    out.checkpoints = trace.checkpoints;
    const StateVector &state = out.final_state;

    BitString zero_b(0, regs.m);
    add_amp_check(out, "amp |x,0^m,0,0> = 1/2", state.at(regs.basis(x, zero_b, false, false)), Amplitude::half());
    add_amp_check(out, "amp |x,0^m,1,0> = 1/2", state.at(regs.basis(x, zero_b, true, false)), Amplitude::half());
    add_amp_check(out, "amp |x,0^m,0,1> = delta0", state.at(regs.basis(x, zero_b, false, true)), g0.delta_amp);
    add_amp_check(out, "amp |x,0^m,1,1> = delta1", state.at(regs.basis(x, zero_b, true, true)), g1.delta_amp);

    StateVector residual = state - un_explicit_terms(regs, x, g0.delta_amp, g1.delta_amp);
    bool clean = true;
    std::string offending;
    for (const auto &[bits, amp] : residual.terms()) {
        BitString basis = term_basis(residual, bits);
        if (basis.slice(regs.n, regs.m).is_zero()) {
            clean = false;
            offending = basis.str();
            break;
        }
    }
    add_check(out, "residual has no b = 0^m component", clean, offending);
    Amplitude residual_mass = norm_sq(residual);
    if (!g0.delta_amp.is_zero() || !g1.delta_amp.is_zero()) {
        add_check(
            out, "residual norm_sq < 1/2", less_than(residual_mass, Amplitude::half()), "norm_sq = " + residual_mass.str());
    }
    add_amp_check(out, "norm_sq = 1", norm_sq(state), Amplitude(1));

    if (options.record_checkpoints) {
        // Psi1: uniform superposition over (b, c) with the oracle bit on a.
        StateVector psi1(regs.width());
        Amplitude scale(1);
        for (int k = 0; k <= regs.m; k++) {
            scale *= Amplitude::inv_sqrt2();
        }
        for (const auto &b : all_inputs(regs.m)) {
            psi1.add(regs.basis(x, b, false, (*pair.v0)(x, b)), scale);
            psi1.add(regs.basis(x, b, true, (*pair.v1)(x, b)), scale);
        }
        add_equality_check(out, "Psi1", trace.checkpoints.at("Psi1"), psi1);

        // Psi2 on the b = 0^m subspace: (1/sqrt2) (R_c |0> + A_c |1>) / 2^m.
        const StateVector &psi2 = trace.checkpoints.at("Psi2");
        bool ok = true;
        for (int c = 0; c < 2; c++) {
            const GapStats &g = c ? g1 : g0;
            auto m = static_cast<std::uint32_t>(regs.m);
            ok &= psi2.at(regs.basis(x, zero_b, c, false)) == Amplitude::dyadic(g.reject, m) * Amplitude::inv_sqrt2();
            ok &= psi2.at(regs.basis(x, zero_b, c, true)) == Amplitude::dyadic(g.accept, m) * Amplitude::inv_sqrt2();
        }
        add_check(out, "Psi2 b = 0^m amplitudes", ok);
        add_equality_check(out, "Psi3", trace.checkpoints.at("Psi3"), state);
    }

    StateVector flagged = filter(state, [&](const BitString &basis) {
        return basis.slice(regs.n, regs.m).is_zero() && basis[regs.a()];
    });
    out.success_mass = norm_sq(flagged);
    out.failure_mass = norm_sq(state) - out.success_mass;
    set_verdict_from_support(out, flagged, regs.c());
    return out;
}

RunOutcome run_fig3(
    const DualVerifierPair &pair, const BitString &x, const FlagDamping &damping, const RunOptions &options) {
    Circuit circuit = build_fig3(pair, x.width, damping);
    const Registers &regs = circuit.regs;
    DualEntry entry = dual_entry(pair, x);
    const int L = entry.answer;
    const Amplitude &delta = entry.live_delta();
    const Amplitude p = damping.factor(regs.m);
    RunOutcome out = start(circuit.name, x, L);
    Trace trace = run_circuit(circuit, x, options.record_checkpoints);
    out.final_state = trace.final_state;
    out.checkpoints = trace.checkpoints;
    const StateVector &state = out.final_state;

    // Closed form built from a separate U_n run and the gap oracle: strip the
    // four explicit terms to get psi', cycle (c, a, 0) -> (a, 0, c), scale.
    Registers small{regs.n, regs.m, false};
    StateVector psi_prime = un_output(pair, x) - un_explicit_terms(small, x, entry.g0.delta_amp, entry.g1.delta_amp);
    StateVector expected(regs.width());
    for (const auto &[bits, amp] : psi_prime.terms()) {
        BitString basis = term_basis(psi_prime, bits);
        BitString xb = basis.slice(0, regs.n + regs.m);
        expected.add(
            regs.basis(xb.slice(0, regs.n), xb.slice(regs.n, regs.m), basis[small.a()], false, basis[small.c()]),
            p * amp);
    }
    BitString zero_b(0, regs.m);
    Amplitude half_p = p * Amplitude::half();
    expected.add(regs.basis(x, zero_b, false, false, false), half_p);
    expected.add(regs.basis(x, zero_b, false, false, true), half_p);
    expected.add(regs.basis(x, zero_b, true, true, L != 0), delta);
    add_equality_check(out, "output equation", state, expected);
    add_amp_check(
        out, "failure term |x,0^m,000> = p/2", state.at(regs.basis(x, zero_b, false, false, false)), half_p);

    StateVector flagged = filter(state, [&](const BitString &basis) { return basis[regs.a()]; });
    out.success_mass = norm_sq(flagged);
    out.failure_mass = norm_sq(state) - out.success_mass;
    Amplitude wrong = mass_where(flagged, [&](const BitString &basis) { return basis[regs.s()] != (L != 0); });
    add_amp_check(out, "wrong-answer mass = 0", wrong, Amplitude{});
    add_amp_check(out, "success mass = delta^2", out.success_mass, delta * delta);

    if (damping.kind == FlagDamping::Kind::BPower) {
        add_check(
            out, "success probability > 1/2", less_than(out.failure_mass, out.success_mass),
            "S = " + out.success_mass.str() + ", F = " + out.failure_mass.str());
    }
    if (damping.kind != FlagDamping::Kind::Project && !less_than(delta * delta, p * p)) {
        // p <= |delta|: failure/success < (p/delta)^2.
        Amplitude lhs = out.failure_mass * delta * delta;
        Amplitude rhs = p * p * out.success_mass;
        add_check(out, "F delta^2 < p^2 S", less_than(lhs, rhs), lhs.str() + " vs " + rhs.str());
    }

    set_verdict_from_support(out, flagged, regs.s());
    if (damping.kind == FlagDamping::Kind::Project && out.answer.has_value()) {
        out.verdict = Verdict::Postselected;
    }
    return out;
}

RunOutcome run_zqp(const DualVerifierPair &pair, const BitString &x, const RunOptions &options) {
    return run_fig3(pair, x, FlagDamping::b_power(), options);
}

RunOutcome run_posteqp(const DualVerifierPair &pair, const BitString &x, const RunOptions &options) {
    RunOutcome out = run_fig3(pair, x, FlagDamping::project(), options);
    if (out.success_mass.is_zero()) {
        throw MismatchError("postselection on the flag has zero mass at x = " + x.str(), x.str());
    }
    add_check(out, "postselected mass > 0", out.success_mass.sign() > 0);
    add_check(
        out, "support on answer = L(x)", out.answer.has_value() && *out.answer == out.expected_answer,
        out.answer.has_value() ? "answer " + std::to_string(*out.answer) : "mixed support");
    return out;
}

RunOutcome run_wn(const DualVerifierPair &pair, const BitString &x, const RunOptions &options) {
    Circuit circuit = build_wn(pair, x.width);
    const Registers &regs = circuit.regs;
    DualEntry entry = dual_entry(pair, x);
    const int L = entry.answer;
    const Amplitude &delta = entry.live_delta();
    RunOutcome out = start("wn", x, L);
    Trace trace = run_circuit(circuit, x, true);
    out.final_state = trace.final_state;
    if (options.record_checkpoints) {
        out.checkpoints = trace.checkpoints;
    }
    const StateVector &state = out.final_state;

    for (const auto &[bits, amp] : state.terms()) {
        BitString basis = term_basis(state, bits);
        if (!basis.slice(regs.n, regs.m).is_zero() || basis[regs.a()]) {
            throw MismatchError(
                "ancilla not restored to 0 in term " + amp.str() + " |" + basis.str() + ">", basis.str());
        }
    }

    BitString zero_b(0, regs.m);
    StateVector psi = pad_zero_wires(un_output(pair, x), 1);
    StateVector phi2 = psi;
    phi2.add(regs.basis(x, zero_b, L != 0, true, false), -delta);
    phi2.add(regs.basis(x, zero_b, L != 0, true, true), delta);
    add_equality_check(out, "Phi2", trace.checkpoints.at("Phi2"), phi2);
    StateVector phi3 = psi;
    phi3.add(regs.basis(x, zero_b, L != 0, true, true), delta);
    add_equality_check(out, "Phi3", trace.checkpoints.at("Phi3"), phi3);
    StateVector phi4(regs.width());
    phi4.add(regs.basis(x, zero_b, false, false, false), Amplitude(1));
    phi4.add(regs.basis(x, zero_b, L != 0, false, true), delta);
    add_equality_check(out, "Phi4", state, phi4);

    StateVector flagged = filter(state, [&](const BitString &basis) { return basis[regs.s()]; });
    out.success_mass = norm_sq(flagged);
    out.failure_mass = norm_sq(state) - out.success_mass;
    set_verdict_from_support(out, flagged, regs.c());
    return out;
}

RunOutcome run_lwpp(
    const DualVerifierPair &pair, const HalfGapFunction &h, const BitString &x, const RunOptions &options) {
    Circuit circuit = build_lwpp_decider(pair, h, x.width);
    DualEntry entry = dual_entry(pair, x);
    RunOutcome out = start("lwpp", x, entry.answer);
    Trace trace = run_circuit(circuit, x, options.record_checkpoints);
    out.final_state = trace.final_state;
    out.checkpoints = trace.checkpoints;
    finish_decider(out, circuit.regs, x, h(x.width));
    return out;
}

RunOutcome run_lpwpp(
    const DualVerifierPair &pair,
    const HalfGapFunction &h,
    const BigInt &base,
    std::int64_t t,
    const BitString &x,
    const RunOptions &options) {
    Circuit circuit = build_lpwpp_decider(pair, h, base, t, x.width);
    DualEntry entry = dual_entry(pair, x);
    RunOutcome out = start("lpwpp", x, entry.answer);
    add_check(out, "finite gate set", uses_finite_gate_set(circuit));
    Trace trace = run_circuit(circuit, x, options.record_checkpoints);
    out.final_state = trace.final_state;
    out.checkpoints = trace.checkpoints;
    StateVector reference = run_circuit(build_lwpp_decider(pair, h, x.width), x, false).final_state;
    add_equality_check(out, "equals A_n decider output", out.final_state, reference);
    finish_decider(out, circuit.regs, x, h(x.width));
    return out;
}

nlohmann::json outcome_to_json(const RunOutcome &outcome, bool include_state, bool include_checkpoints) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto &c : outcome.checks) {
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    nlohmann::json j{
        {"construction", outcome.construction},
        {"x", outcome.x.str()},
        {"expected_answer", outcome.expected_answer},
        {"verdict", verdict_name(outcome.verdict)},
        {"answer", outcome.answer.has_value() ? nlohmann::json(*outcome.answer) : nlohmann::json(nullptr)},
        {"success_mass", outcome.success_mass},
        {"failure_mass", outcome.failure_mass},
        {"success_probability",
         {{"num", outcome.success_mass}, {"den", outcome.success_mass + outcome.failure_mass}}},
        {"checks", checks},
        {"passed", outcome.passed()},
    };
    if (include_state) {
        j["width"] = outcome.final_state.width();
        j["final_state"] = state_to_json(outcome.final_state);
    }
    if (include_checkpoints) {
        nlohmann::json cps = nlohmann::json::object();
        for (const auto &[label, state] : outcome.checkpoints) {
            cps[label] = state_to_json(state);
        }
        j["width"] = outcome.final_state.width();
        j["checkpoints"] = cps;
    }
    return j;
}

RunOutcome outcome_from_json(const nlohmann::json &j) {
    try {
        RunOutcome out;
        out.construction = j.at("construction").get<std::string>();
        out.x = BitString::parse(j.at("x").get<std::string>());
        out.expected_answer = j.at("expected_answer").get<int>();
        out.verdict = verdict_from_name(j.at("verdict").get<std::string>());
        if (!j.at("answer").is_null()) {
            out.answer = j.at("answer").get<int>();
        }
        out.success_mass = j.at("success_mass").get<Amplitude>();
        out.failure_mass = j.at("failure_mass").get<Amplitude>();
        for (const auto &c : j.at("checks")) {
            out.checks.push_back(
                CheckResult{c.at("name").get<std::string>(), c.at("passed").get<bool>(), c.at("detail").get<std::string>()});
        }
        int width = j.value("width", -1);
        if (j.contains("final_state")) {
            out.final_state = state_from_json(j.at("final_state"), width);
        }
        if (j.contains("checkpoints")) {
            for (const auto &[label, state] : j.at("checkpoints").items()) {
                out.checkpoints.emplace(label, state_from_json(state, width));
            }
        }
        return out;
    } catch (const nlohmann::json::exception &e) {
        throw SpecError(std::string("run outcome JSON: ") + e.what());
    }
}

}  // namespace qqc
