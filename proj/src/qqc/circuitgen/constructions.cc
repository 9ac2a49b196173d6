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

#include "qqc/circuitgen/constructions.h"

#include <algorithm>
#include <optional>

#include "qqc/errors.h"

namespace qqc {

namespace {

Registers layout_for(const DualVerifierPair &pair, int n, bool has_s) {
    if (pair.v0 == nullptr || pair.v1 == nullptr) {
        throw UsageError("dual pair is missing a verifier");
    }
    if (pair.v0->n() != n || pair.v1->n() != n) {
        throw UsageError(
            "register-size mismatch: circuit for n = " + std::to_string(n) + " but verifiers take n = " +
            std::to_string(pair.v0->n()) + " and " + std::to_string(pair.v1->n()));
    }
    if (pair.v0->m() != pair.v1->m()) {
        throw UsageError("register-size mismatch: verifiers disagree on m");
    }
    Registers regs{n, pair.m(), has_s};
    if (regs.width() > kMaxWidth) {
        throw UsageError("circuit would need " + std::to_string(regs.width()) + " wires; at most 64 are supported");
    }
    return regs;
}

void append_hadamards(std::vector<Gate> &gates, const std::vector<int> &wires) {
    for (int w : wires) {
        gates.push_back(Gate::h(w));
    }
}

Gate zero_branch_mcx(const Registers &regs) {
    std::vector<int> controls = regs.b_wires();
    std::vector<bool> polarity(controls.size(), false);
    controls.push_back(regs.a());
    polarity.push_back(true);
    return Gate::mcx(std::move(controls), std::move(polarity), regs.s());
}

void append_decider_tail(
    Circuit &circuit, const Registers &regs, const std::vector<Gate> &scale_gates) {
    circuit.mark("Wn");
    circuit.append(Gate::swap(regs.c(), regs.s()));
    circuit.mark("swapped");
    for (int k = 0; k < regs.m; k++) {
        circuit.append(Gate::b(regs.c()));
    }
    circuit.append(scale_gates);
    circuit.mark("scaled");
    circuit.append(Gate::d(regs.c(), regs.s()));
    circuit.mark("PhiL");
}

}  // namespace

std::vector<Gate> un_gates(const DualVerifierPair &pair, const Registers &regs) {
    std::vector<Gate> gates;
    append_hadamards(gates, regs.b_wires());
    gates.push_back(Gate::h(regs.c()));
    gates.push_back(Gate::oracle_gate(pair.v0, regs.x_wires(), regs.b_wires(), regs.a())
                        .with_control(Control{regs.c(), false}));
    gates.push_back(Gate::oracle_gate(pair.v1, regs.x_wires(), regs.b_wires(), regs.a())
                        .with_control(Control{regs.c(), true}));
    append_hadamards(gates, regs.b_wires());
    gates.push_back(Gate::h(regs.a()));
    return gates;
}

Circuit build_un(const DualVerifierPair &pair, int n) {
    Circuit circuit;
    circuit.name = "un";
    circuit.regs = layout_for(pair, n, false);
    auto gates = un_gates(pair, circuit.regs);
    const std::size_t m = static_cast<std::size_t>(circuit.regs.m);
    // H^(m+1), two oracles, H^m, H.
    circuit.append(std::vector<Gate>(gates.begin(), gates.begin() + static_cast<std::ptrdiff_t>(m + 3)));
    circuit.mark("Psi1");
    circuit.append(std::vector<Gate>(gates.begin() + static_cast<std::ptrdiff_t>(m + 3), gates.end() - 1));
    circuit.mark("Psi2");
    circuit.append(gates.back());
    circuit.mark("Psi3");
    return circuit;
}

Amplitude FlagDamping::factor(int m) const {
    switch (kind) {
        case Kind::BPower:
            return Amplitude::dyadic(1, static_cast<std::uint32_t>(m));
        case Kind::NGate:
            return p;
        case Kind::Project:
            return Amplitude{};
    }
    return {};
}

Circuit build_fig3(const DualVerifierPair &pair, int n, const FlagDamping &damping) {
    if (damping.kind == FlagDamping::Kind::NGate && (damping.p.sign() < 0 || less_than(Amplitude(1), damping.p))) {
        throw UsageError("N gate parameter p = " + damping.p.str() + " must satisfy 0 <= p <= 1");
    }
    Circuit circuit;
    circuit.regs = layout_for(pair, n, true);
    const auto &regs = circuit.regs;
    switch (damping.kind) {
        case FlagDamping::Kind::BPower:
            circuit.name = "fig3-zqp";
            break;
        case FlagDamping::Kind::NGate:
            circuit.name = "fig3-n";
            break;
        case FlagDamping::Kind::Project:
            circuit.name = "fig3-post";
            break;
    }
    circuit.append(un_gates(pair, regs));
    circuit.mark("Un");
    circuit.append(zero_branch_mcx(regs));
    circuit.mark("flagged");
    circuit.append(Gate::cycle({regs.c(), regs.a(), regs.s()}));
    circuit.mark("cycled");
    switch (damping.kind) {
        case FlagDamping::Kind::BPower:
            for (int k = 0; k < regs.m; k++) {
                circuit.append(Gate::b(regs.a()));
            }
            break;
        case FlagDamping::Kind::NGate:
            circuit.append(Gate::n(regs.a(), damping.p));
            break;
        case FlagDamping::Kind::Project:
            circuit.append(Gate::proj1(regs.a()));
            break;
    }
    circuit.mark("PsiL");
    return circuit;
}

Circuit build_wn(const DualVerifierPair &pair, int n) {
    Circuit circuit;
    circuit.name = "wn";
    circuit.regs = layout_for(pair, n, true);
    const auto &regs = circuit.regs;
    auto forward = un_gates(pair, regs);
    circuit.append(forward);
    circuit.mark("Phi1");
    circuit.append(zero_branch_mcx(regs));
    circuit.mark("Phi2");
    circuit.append(Gate::s(regs.s()));
    circuit.mark("Phi3");
    for (auto it = forward.rbegin(); it != forward.rend(); ++it) {
        circuit.append(it->inverse().with_control(Control{regs.s(), false}));
    }
    circuit.append(Gate::cnot(regs.s(), regs.a()));
    circuit.mark("Phi4");
    return circuit;
}

Circuit build_lwpp_decider(const DualVerifierPair &pair, const HalfGapFunction &h, int n) {
    Circuit circuit = build_wn(pair, n);
    circuit.name = "lwpp";
    circuit.checkpoints.clear();
    append_decider_tail(circuit, circuit.regs, {Gate::a(circuit.regs.c(), Amplitude(h(n)))});
    return circuit;
}

Circuit build_lpwpp_decider(
    const DualVerifierPair &pair, const HalfGapFunction &h, const BigInt &base, std::int64_t t, int n) {
    if (base < 1 || t < 0) {
        throw PreconditionError("LPWPP decider needs M >= 1 and t >= 0", std::to_string(n));
    }
    BigInt hn = h(n);
    if (boost::multiprecision::pow(base, static_cast<unsigned>(t)) != hn) {
        throw PreconditionError(
            "h(" + std::to_string(n) + ") = " + hn.str() + " is not " + base.str() + "^" + std::to_string(t),
            std::to_string(n));
    }
    Circuit circuit = build_wn(pair, n);
    circuit.name = "lpwpp";
    circuit.checkpoints.clear();
    std::vector<Gate> g_block(static_cast<std::size_t>(t), Gate::g(circuit.regs.c(), Amplitude(base)));
    append_decider_tail(circuit, circuit.regs, g_block);
    return circuit;
}

bool uses_finite_gate_set(const Circuit &circuit) {
    std::optional<Amplitude> g_param;
    for (const auto &g : circuit.gates) {
        switch (g.kind) {
            case GateKind::X:
            case GateKind::CNOT:
            case GateKind::TOFFOLI:
            case GateKind::MCX:
            case GateKind::SWAP:
            case GateKind::CYCLE:
            case GateKind::ORACLE:
            case GateKind::H:
            case GateKind::S:
            case GateKind::B:
            case GateKind::D:
                break;
            case GateKind::G:
                // One fixed G for the whole circuit.
                if (g_param.has_value() && *g_param != g.param) {
                    return false;
                }
                g_param = g.param;
                break;
            default:
                return false;
        }
    }
    return true;
}

}  // namespace qqc
