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

#include "qqc/circuitgen/circuit.h"

#include "qqc/errors.h"

namespace qqc {

std::vector<int> Registers::x_wires() const {
    std::vector<int> out;
    for (int i = 0; i < n; i++) {
        out.push_back(x(i));
    }
    return out;
}

std::vector<int> Registers::b_wires() const {
    std::vector<int> out;
    for (int j = 0; j < m; j++) {
        out.push_back(b(j));
    }
    return out;
}

BitString Registers::basis(const BitString &x, const BitString &b, bool c, bool a, bool s) const {
    if (x.width != n || b.width != m) {
        throw UsageError("register basis: x/b widths do not match the layout");
    }
    BitString tail = has_s ? BitString((std::uint64_t{c} << 2) | (std::uint64_t{a} << 1) | std::uint64_t{s}, 3)
                           : BitString((std::uint64_t{c} << 1) | std::uint64_t{a}, 2);
    return concat(concat(x, b), tail);
}

void Circuit::mark(std::string label) {
    for (const auto &c : checkpoints) {
        if (c.label == label) {
            throw UsageError("duplicate checkpoint label '" + label + "'");
        }
    }
    checkpoints.push_back(Checkpoint{std::move(label), gates.size()});
}

void Circuit::validate() const {
    for (const auto &g : gates) {
        for (int w : g.wires) {
            if (w < 0 || w >= width()) {
                throw UsageError("gate " + g.str() + " leaves the circuit width " + std::to_string(width()));
            }
        }
        for (const auto &c : g.controls) {
            if (c.wire < 0 || c.wire >= width()) {
                throw UsageError("gate " + g.str() + " has a control outside the circuit width");
            }
        }
    }
    for (const auto &c : checkpoints) {
        if (c.after > gates.size()) {
            throw UsageError("checkpoint '" + c.label + "' lies past the last gate");
        }
    }
}

Trace run_circuit(const Circuit &circuit, const BitString &x, bool record_checkpoints) {
    if (x.width != circuit.regs.n) {
        throw UsageError(
            "input '" + x.str() + "' has length " + std::to_string(x.width) + ", circuit " + circuit.name +
            " expects n = " + std::to_string(circuit.regs.n));
    }
    circuit.validate();
    Trace trace;
    StateVector state = StateVector::basis(concat(x, BitString(0, circuit.width() - x.width)));
    auto capture = [&](std::size_t position) {
        if (!record_checkpoints) {
            return;
        }
        for (const auto &c : circuit.checkpoints) {
            if (c.after == position) {
                trace.checkpoints.emplace(c.label, state);
            }
        }
    };
    capture(0);
    for (std::size_t k = 0; k < circuit.gates.size(); k++) {
        state = apply(state, circuit.gates[k]);
        capture(k + 1);
    }
    trace.final_state = std::move(state);
    return trace;
}

nlohmann::json gate_to_json(const Gate &gate) {
    nlohmann::json j{{"kind", std::string(gate_kind_name(gate.kind))}, {"wires", gate.wires}};
    if (!gate.polarity.empty()) {
        std::vector<int> pol;
        for (bool p : gate.polarity) {
            pol.push_back(p ? 1 : 0);
        }
        j["polarity"] = pol;
    }
    if (!gate.controls.empty()) {
        nlohmann::json cs = nlohmann::json::array();
        for (const auto &c : gate.controls) {
            cs.push_back({{"wire", c.wire}, {"value", c.value ? 1 : 0}});
        }
        j["controls"] = cs;
    }
    nlohmann::json params = nlohmann::json::object();
    if (!gate.param.is_zero() || gate.kind == GateKind::N) {
        params["value"] = gate.param;
    }
    if (gate.inverted) {
        params["inverted"] = true;
    }
    if (gate.oracle != nullptr) {
        params["oracle"] = gate.oracle->name();
    }
    j["params"] = params;
    return j;
}

nlohmann::json circuit_to_json(const Circuit &circuit) {
    const auto &r = circuit.regs;
    nlohmann::json regs{
        {"n", r.n},
        {"m", r.m},
        {"x", {r.x(0), r.n}},
        {"b", {r.b(0), r.m}},
        {"c", r.c()},
        {"a", r.a()},
    };
    if (r.has_s) {
        regs["s"] = r.s();
    }
    nlohmann::json gates = nlohmann::json::array();
    for (const auto &g : circuit.gates) {
        gates.push_back(gate_to_json(g));
    }
    nlohmann::json checkpoints = nlohmann::json::array();
    for (const auto &c : circuit.checkpoints) {
        checkpoints.push_back({{"label", c.label}, {"after", c.after}});
    }
    return nlohmann::json{
        {"name", circuit.name},
        {"width", circuit.width()},
        {"registers", regs},
        {"gates", gates},
        {"checkpoints", checkpoints},
    };
}

Gate gate_from_json(const nlohmann::json &j, const OracleResolver &resolve) {
    try {
        auto kind_name = j.at("kind").get<std::string>();
        auto kind = gate_kind_from_name(kind_name);
        if (!kind.has_value()) {
            throw SpecError("unknown gate kind '" + kind_name + "'");
        }
        Gate g;
        g.kind = *kind;
        g.wires = j.at("wires").get<std::vector<int>>();
        if (j.contains("polarity")) {
            for (int p : j.at("polarity").get<std::vector<int>>()) {
                g.polarity.push_back(p != 0);
            }
        }
        if (j.contains("controls")) {
            for (const auto &c : j.at("controls")) {
                g.controls.push_back(Control{c.at("wire").get<int>(), c.at("value").get<int>() != 0});
            }
        }
        const auto &params = j.contains("params") ? j.at("params") : nlohmann::json::object();
        if (params.contains("value")) {
            g.param = params.at("value").get<Amplitude>();
        }
        g.inverted = params.value("inverted", false);
        if (params.contains("oracle")) {
            auto name = params.at("oracle").get<std::string>();
            g.oracle = resolve ? resolve(name) : nullptr;
            if (g.oracle == nullptr) {
                throw SpecError("cannot resolve oracle '" + name + "'");
            }
        } else if (g.kind == GateKind::ORACLE) {
            throw SpecError("ORACLE gate without an oracle name");
        }
        return g;
    } catch (const nlohmann::json::exception &e) {
        throw SpecError(std::string("gate JSON: ") + e.what());
    }
}

Circuit circuit_from_json(const nlohmann::json &j, const OracleResolver &resolve) {
    try {
        Circuit c;
        c.name = j.at("name").get<std::string>();
        const auto &regs = j.at("registers");
        c.regs.n = regs.at("n").get<int>();
        c.regs.m = regs.at("m").get<int>();
        c.regs.has_s = regs.contains("s");
        if (j.at("width").get<int>() != c.regs.width()) {
            throw SpecError("circuit JSON: width disagrees with the register map");
        }
        for (const auto &g : j.at("gates")) {
            c.gates.push_back(gate_from_json(g, resolve));
        }
        for (const auto &cp : j.at("checkpoints")) {
            c.checkpoints.push_back(Checkpoint{cp.at("label").get<std::string>(), cp.at("after").get<std::size_t>()});
        }
        c.validate();
        return c;
    } catch (const nlohmann::json::exception &e) {
        throw SpecError(std::string("circuit JSON: ") + e.what());
    } catch (const UsageError &e) {
        throw SpecError(std::string("circuit JSON: ") + e.what());
    }
}

}  // namespace qqc
