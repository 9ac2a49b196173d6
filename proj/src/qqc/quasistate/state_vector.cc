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

#include "qqc/quasistate/state_vector.h"

#include <set>
#include <sstream>

#include "qqc/errors.h"

namespace qqc {

namespace {

// Bit access on a raw basis label of the given width, wire 0 leftmost.
struct Wires {
    int width;

    std::uint64_t mask(int wire) const {
        return std::uint64_t{1} << (width - 1 - wire);
    }
    bool get(std::uint64_t bits, int wire) const {
        return (bits & mask(wire)) != 0;
    }
    std::uint64_t set(std::uint64_t bits, int wire, bool value) const {
        return value ? (bits | mask(wire)) : (bits & ~mask(wire));
    }
    std::uint64_t flip(std::uint64_t bits, int wire) const {
        return bits ^ mask(wire);
    }
};

size_t expected_arity(const Gate &gate) {
    switch (gate.kind) {
        case GateKind::X:
        case GateKind::H:
        case GateKind::S:
        case GateKind::B:
        case GateKind::G:
        case GateKind::A:
        case GateKind::N:
        case GateKind::PROJ0:
        case GateKind::PROJ1:
            return 1;
        case GateKind::CNOT:
        case GateKind::SWAP:
        case GateKind::D:
            return 2;
        case GateKind::TOFFOLI:
            return 3;
        case GateKind::ORACLE:
            return static_cast<size_t>(gate.oracle->input_width() + gate.oracle->branch_width() + 1);
        case GateKind::MCX:
            return gate.polarity.size() + 1;
        case GateKind::CYCLE:
            return gate.wires.size();
    }
    return 0;
}

void validate(const Gate &gate, int width) {
    if (gate.kind == GateKind::ORACLE && gate.oracle == nullptr) {
        throw UsageError("ORACLE gate without an oracle");
    }
    if (gate.wires.size() != expected_arity(gate)) {
        throw UsageError(
            "gate " + gate.str() + " has " + std::to_string(gate.wires.size()) + " wires, expected " +
            std::to_string(expected_arity(gate)));
    }
    if (gate.kind == GateKind::CYCLE && gate.wires.size() < 2) {
        throw UsageError("CYCLE needs at least two wires");
    }
    std::set<int> seen;
    auto check = [&](int w) {
        if (w < 0 || w >= width) {
            throw UsageError(
                "wire index " + std::to_string(w) + " out of range for width " + std::to_string(width) + " in gate " +
                gate.str());
        }
        if (!seen.insert(w).second) {
            throw UsageError("wire " + std::to_string(w) + " used twice in gate " + gate.str());
        }
    };
    for (int w : gate.wires) {
        check(w);
    }
    for (const auto &c : gate.controls) {
        check(c.wire);
    }
}

template <typename Emit>
void act_on_term(const Gate &gate, const Wires &w, std::uint64_t in, const Amplitude &amp, Emit &&emit) {
    for (const auto &c : gate.controls) {
        if (w.get(in, c.wire) != c.value) {
            emit(in, amp);
            return;
        }
    }
    const auto &ws = gate.wires;
    switch (gate.kind) {
        case GateKind::X:
            emit(w.flip(in, ws[0]), amp);
            return;
        case GateKind::CNOT:
            emit(w.get(in, ws[0]) ? w.flip(in, ws[1]) : in, amp);
            return;
        case GateKind::TOFFOLI:
            emit(w.get(in, ws[0]) && w.get(in, ws[1]) ? w.flip(in, ws[2]) : in, amp);
            return;
        case GateKind::MCX: {
            bool fire = true;
            for (size_t k = 0; k < gate.polarity.size(); k++) {
                fire = fire && (w.get(in, ws[k]) == gate.polarity[k]);
            }
            emit(fire ? w.flip(in, ws.back()) : in, amp);
            return;
        }
        case GateKind::SWAP: {
            bool v0 = w.get(in, ws[0]);
            bool v1 = w.get(in, ws[1]);
            emit(w.set(w.set(in, ws[0], v1), ws[1], v0), amp);
            return;
        }
        case GateKind::CYCLE: {
            size_t k = ws.size();
            std::uint64_t out = in;
            for (size_t i = 0; i < k; i++) {
                // Forward: w_i <- w_{i+1}. Inverted: w_{i+1} <- w_i.
                size_t src = gate.inverted ? (i + k - 1) % k : (i + 1) % k;
                out = w.set(out, ws[i], w.get(in, ws[src]));
            }
            emit(out, amp);
            return;
        }
        case GateKind::H: {
            Amplitude scaled = amp * Amplitude::inv_sqrt2();
            emit(w.set(in, ws[0], false), scaled);
            emit(w.set(in, ws[0], true), w.get(in, ws[0]) ? -scaled : scaled);
            return;
        }
        case GateKind::S:
            if (w.get(in, ws[0])) {
                emit(w.set(in, ws[0], false), gate.inverted ? -amp : amp);
            }
            emit(in, amp);
            return;
        case GateKind::B:
        case GateKind::G:
        case GateKind::A:
        case GateKind::N:
            emit(in, w.get(in, ws[0]) ? amp : amp * gate.diagonal_entry());
            return;
        case GateKind::D:
            if (w.get(in, ws[0])) {
                std::uint64_t zero = w.set(w.set(in, ws[0], false), ws[1], false);
                emit(zero, gate.inverted ? amp : -amp);
            }
            emit(in, amp);
            return;
        case GateKind::PROJ0:
            if (!w.get(in, ws[0])) {
                emit(in, amp);
            }
            return;
        case GateKind::PROJ1:
            if (w.get(in, ws[0])) {
                emit(in, amp);
            }
            return;
        case GateKind::ORACLE: {
            int n = gate.oracle->input_width();
            int m = gate.oracle->branch_width();
            std::uint64_t x = 0;
            std::uint64_t b = 0;
            for (int k = 0; k < n; k++) {
                x = (x << 1) | static_cast<std::uint64_t>(w.get(in, ws[static_cast<size_t>(k)]));
            }
            for (int k = 0; k < m; k++) {
                b = (b << 1) | static_cast<std::uint64_t>(w.get(in, ws[static_cast<size_t>(n + k)]));
            }
            bool fire = gate.oracle->eval(BitString(x, n), BitString(b, m));
            emit(fire ? w.flip(in, ws.back()) : in, amp);
            return;
        }
    }
}

bool is_wildcard(char ch) {
    return ch == '*' || ch == '.' || ch == '?' || ch == '-';
}

}  // namespace

StateVector::StateVector(int width) : width_(width) {
    if (width < 0 || width > kMaxWidth) {
        throw UsageError("state width " + std::to_string(width) + " outside [0, 64]");
    }
}

StateVector StateVector::basis(const BitString &basis) {
    StateVector out(basis.width);
    out.terms_.emplace(basis.bits, Amplitude(1));
    return out;
}

void StateVector::check_width(const BitString &basis) const {
    if (basis.width != width_) {
        throw UsageError(
            "basis state width " + std::to_string(basis.width) + " does not match state width " +
            std::to_string(width_));
    }
}

Amplitude StateVector::at(const BitString &basis) const {
    check_width(basis);
    auto it = terms_.find(basis.bits);
    return it == terms_.end() ? Amplitude{} : it->second;
}

void StateVector::add(const BitString &basis, const Amplitude &amp) {
    check_width(basis);
    if (amp.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(basis.bits, amp);
    if (!inserted) {
        it->second += amp;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

StateVector StateVector::operator+(const StateVector &other) const {
    if (other.width_ != width_) {
        throw UsageError("cannot add states of different widths");
    }
    StateVector out = *this;
    for (const auto &[bits, amp] : other.terms_) {
        out.add(BitString(bits, width_), amp);
    }
    return out;
}

StateVector StateVector::operator-(const StateVector &other) const {
    return *this + other * Amplitude(-1);
}

StateVector StateVector::operator*(const Amplitude &scalar) const {
    StateVector out(width_);
    if (scalar.is_zero()) {
        return out;
    }
    for (const auto &[bits, amp] : terms_) {
        out.terms_.emplace(bits, amp * scalar);
    }
    return out;
}

std::string StateVector::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto &[bits, amp] : terms_) {
        if (!first) {
            out << " + ";
        }
        first = false;
        out << amp << "|" << BitString(bits, width_).str() << ">";
    }
    return out.str();
}

StateVector apply(const StateVector &state, const Gate &gate) {
    validate(gate, state.width());
    Wires w{state.width()};
    StateVector out(state.width());
    for (const auto &[bits, amp] : state.terms()) {
        act_on_term(gate, w, bits, amp, [&](std::uint64_t b, const Amplitude &a) {
            out.add(BitString(b, state.width()), a);
        });
    }
    return out;
}

StateVector apply_all(StateVector state, const std::vector<Gate> &gates) {
    for (const auto &g : gates) {
        state = apply(state, g);
    }
    return state;
}

Amplitude norm_sq(const StateVector &state) {
    Amplitude total;
    for (const auto &[bits, amp] : state.terms()) {
        total += amp * amp;
    }
    return total;
}

std::vector<std::pair<BasisState, Amplitude>> amplitude_of(const StateVector &state, std::string_view pattern) {
    if (static_cast<int>(pattern.size()) != state.width()) {
        throw UsageError(
            "pattern width " + std::to_string(pattern.size()) + " does not match state width " +
            std::to_string(state.width()));
    }
    std::uint64_t care = 0;
    std::uint64_t want = 0;
    for (char ch : pattern) {
        care <<= 1;
        want <<= 1;
        if (is_wildcard(ch)) {
            continue;
        }
        if (ch != '0' && ch != '1') {
            throw UsageError("pattern may only contain 0, 1 and wildcards: '" + std::string(pattern) + "'");
        }
        care |= 1;
        want |= static_cast<std::uint64_t>(ch == '1');
    }
    std::vector<std::pair<BasisState, Amplitude>> out;
    for (const auto &[bits, amp] : state.terms()) {
        if ((bits & care) == want) {
            out.emplace_back(BitString(bits, state.width()), amp);
        }
    }
    return out;
}

Projection project(const StateVector &state, int wire, bool value) {
    if (state.empty()) {
        throw UsageError("cannot project the zero state");
    }
    if (wire < 0 || wire >= state.width()) {
        throw UsageError("projection wire " + std::to_string(wire) + " out of range");
    }
    StateVector conditional = apply(state, value ? Gate::proj1(wire) : Gate::proj0(wire));
    Amplitude mass = norm_sq(conditional);
    return Projection{std::move(mass), std::move(conditional)};
}

nlohmann::json state_to_json(const StateVector &state) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto &[bits, amp] : state.terms()) {
        out.push_back({{"basis", BitString(bits, state.width()).str()}, {"amp", amp}});
    }
    return out;
}

StateVector state_from_json(const nlohmann::json &j, int width) {
    if (!j.is_array()) {
        throw SpecError("state JSON must be an array");
    }
    if (width < 0) {
        if (j.empty()) {
            throw SpecError("cannot infer the width of an empty state");
        }
        width = static_cast<int>(j.at(0).at("basis").get<std::string>().size());
    }
    StateVector out(width);
    for (const auto &term : j) {
        if (!term.is_object() || !term.contains("basis") || !term.contains("amp")) {
            throw SpecError("state term must have basis and amp");
        }
        BitString basis;
        try {
            basis = BitString::parse(term.at("basis").get<std::string>());
        } catch (const UsageError &e) {
            throw SpecError(e.what());
        }
        if (basis.width != width) {
            throw SpecError("state term width mismatch");
        }
        out.add(basis, term.at("amp").get<Amplitude>());
    }
    return out;
}

}  // namespace qqc
