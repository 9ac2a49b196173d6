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

#include "qqc/quasistate/gate.h"

#include <array>
#include <sstream>
#include <utility>

#include "qqc/errors.h"

namespace qqc {

namespace {

constexpr std::array<std::pair<GateKind, std::string_view>, 16> kKindNames{{
    {GateKind::X, "X"},
    {GateKind::CNOT, "CNOT"},
    {GateKind::TOFFOLI, "TOFFOLI"},
    {GateKind::MCX, "MCX"},
    {GateKind::SWAP, "SWAP"},
    {GateKind::CYCLE, "CYCLE"},
    {GateKind::H, "H"},
    {GateKind::S, "S"},
    {GateKind::B, "B"},
    {GateKind::G, "G"},
    {GateKind::A, "A"},
    {GateKind::N, "N"},
    {GateKind::D, "D"},
    {GateKind::PROJ0, "PROJ0"},
    {GateKind::PROJ1, "PROJ1"},
    {GateKind::ORACLE, "ORACLE"},
}};

Gate make(GateKind kind, std::vector<int> wires) {
    Gate g;
    g.kind = kind;
    g.wires = std::move(wires);
    return g;
}

bool is_diagonal_kind(GateKind kind) {
    return kind == GateKind::B || kind == GateKind::G || kind == GateKind::A || kind == GateKind::N;
}

}  // namespace

std::string_view gate_kind_name(GateKind kind) {
    for (const auto &[k, name] : kKindNames) {
        if (k == kind) {
            return name;
        }
    }
    return "?";
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
    for (const auto &[k, n] : kKindNames) {
        if (n == name) {
            return k;
        }
    }
    return std::nullopt;
}

Gate Gate::x(int target) {
    return make(GateKind::X, {target});
}

Gate Gate::cnot(int control, int target) {
    return make(GateKind::CNOT, {control, target});
}

Gate Gate::toffoli(int c1, int c2, int target) {
    return make(GateKind::TOFFOLI, {c1, c2, target});
}

Gate Gate::mcx(std::vector<int> control_wires, std::vector<bool> polarity, int target) {
    if (control_wires.size() != polarity.size()) {
        throw UsageError("MCX needs one polarity per control wire");
    }
    control_wires.push_back(target);
    Gate g = make(GateKind::MCX, std::move(control_wires));
    g.polarity = std::move(polarity);
    return g;
}

Gate Gate::swap(int w0, int w1) {
    return make(GateKind::SWAP, {w0, w1});
}

Gate Gate::cycle(std::vector<int> wires) {
    return make(GateKind::CYCLE, std::move(wires));
}

Gate Gate::h(int target) {
    return make(GateKind::H, {target});
}

Gate Gate::s(int target) {
    return make(GateKind::S, {target});
}

Gate Gate::b(int target) {
    Gate g = make(GateKind::B, {target});
    g.param = Amplitude::half();
    return g;
}

Gate Gate::g(int target, Amplitude m) {
    Gate g = make(GateKind::G, {target});
    g.param = std::move(m);
    return g;
}

Gate Gate::a(int target, Amplitude h) {
    Gate g = make(GateKind::A, {target});
    g.param = std::move(h);
    return g;
}

Gate Gate::n(int target, Amplitude p) {
    Gate g = make(GateKind::N, {target});
    g.param = std::move(p);
    return g;
}

Gate Gate::d(int high, int low) {
    return make(GateKind::D, {high, low});
}

Gate Gate::proj0(int target) {
    return make(GateKind::PROJ0, {target});
}

Gate Gate::proj1(int target) {
    return make(GateKind::PROJ1, {target});
}

Gate Gate::oracle_gate(
    std::shared_ptr<const Oracle> oracle, std::vector<int> x_wires, std::vector<int> b_wires, int target) {
    if (oracle == nullptr) {
        throw UsageError("ORACLE gate needs an oracle");
    }
    std::vector<int> wires = std::move(x_wires);
    wires.insert(wires.end(), b_wires.begin(), b_wires.end());
    wires.push_back(target);
    Gate g = make(GateKind::ORACLE, std::move(wires));
    g.oracle = std::move(oracle);
    return g;
}

Gate Gate::with_control(Control control) const {
    Gate out = *this;
    out.controls.push_back(control);
    return out;
}

bool Gate::is_classical() const {
    switch (kind) {
        case GateKind::X:
        case GateKind::CNOT:
        case GateKind::TOFFOLI:
        case GateKind::MCX:
        case GateKind::SWAP:
        case GateKind::CYCLE:
        case GateKind::ORACLE:
            return true;
        default:
            return false;
    }
}

bool Gate::is_unitary() const {
    return is_classical() || kind == GateKind::H;
}

Amplitude Gate::diagonal_entry() const {
    if (!is_diagonal_kind(kind)) {
        throw UsageError("gate " + std::string(gate_kind_name(kind)) + " is not a diagonal gate");
    }
    if (!inverted) {
        return param;
    }
    auto inv = param.inverse();
    if (!inv.has_value()) {
        throw NotInvertibleError(
            "diagonal entry " + param.str() + " of " + std::string(gate_kind_name(kind)) +
            " has no inverse in Z[sqrt2][1/2]");
    }
    return *inv;
}

bool Gate::is_invertible() const {
    if (kind == GateKind::PROJ0 || kind == GateKind::PROJ1) {
        return false;
    }
    if (is_diagonal_kind(kind)) {
        return param.inverse().has_value();
    }
    return true;
}

Gate Gate::inverse() const {
    if (kind == GateKind::PROJ0 || kind == GateKind::PROJ1) {
        throw NotInvertibleError("projectors have no inverse");
    }
    if (is_diagonal_kind(kind) && !param.inverse().has_value()) {
        throw NotInvertibleError(
            std::string(gate_kind_name(kind)) + "(" + param.str() + ") has no inverse in Z[sqrt2][1/2]");
    }
    Gate out = *this;
    switch (kind) {
        case GateKind::X:
        case GateKind::CNOT:
        case GateKind::TOFFOLI:
        case GateKind::MCX:
        case GateKind::SWAP:
        case GateKind::H:
        case GateKind::ORACLE:
            break;
        default:
            out.inverted = !inverted;
            break;
    }
    return out;
}

std::string Gate::str() const {
    std::ostringstream out;
    out << gate_kind_name(kind);
    if (inverted) {
        out << "^-1";
    }
    if (is_diagonal_kind(kind) && kind != GateKind::B) {
        out << "(" << param << ")";
    }
    if (kind == GateKind::ORACLE && oracle != nullptr) {
        out << "[" << oracle->name() << "]";
    }
    out << " ";
    for (size_t k = 0; k < wires.size(); k++) {
        if (k) {
            out << ",";
        }
        if (kind == GateKind::MCX && k < polarity.size()) {
            out << (polarity[k] ? "" : "!");
        }
        out << wires[k];
    }
    for (const auto &c : controls) {
        out << " if " << c.wire << "=" << (c.value ? 1 : 0);
    }
    return out.str();
}

bool Gate::operator==(const Gate &other) const {
    return kind == other.kind && wires == other.wires && polarity == other.polarity && controls == other.controls &&
           param == other.param && inverted == other.inverted && oracle == other.oracle;
}

}  // namespace qqc
