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

#ifndef QQC_CIRCUITGEN_CIRCUIT_H
#define QQC_CIRCUITGEN_CIRCUIT_H

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "qqc/quasistate/gate.h"
#include "qqc/quasistate/state_vector.h"

namespace qqc {

/// Register layout shared by every construction: x (n wires), b (m wires),
/// then the single wires c, a and, when present, s.
struct Registers {
    int n = 0;
    int m = 0;
    bool has_s = false;

    int x(int i) const {
        return i;
    }
    int b(int j) const {
        return n + j;
    }
    int c() const {
        return n + m;
    }
    int a() const {
        return n + m + 1;
    }
    int s() const {
        return n + m + 2;
    }
    int width() const {
        return n + m + (has_s ? 3 : 2);
    }
    std::vector<int> x_wires() const;
    std::vector<int> b_wires() const;

    /// |x>|b>|c>|a>(|s>) as one basis label.
    BitString basis(const BitString &x, const BitString &b, bool c, bool a, bool s = false) const;

    bool operator==(const Registers &other) const = default;
};

struct Checkpoint {
    std::string label;
    /// Number of gates applied before the state is captured.
    std::size_t after = 0;

    bool operator==(const Checkpoint &other) const = default;
};

struct Circuit {
    std::string name;
    Registers regs;
    std::vector<Gate> gates;
    std::vector<Checkpoint> checkpoints;

    int width() const {
        return regs.width();
    }
    void append(Gate gate) {
        gates.push_back(std::move(gate));
    }
    void append(const std::vector<Gate> &more) {
        gates.insert(gates.end(), more.begin(), more.end());
    }
    /// Marks the current end of the gate list. Throws UsageError on a
    /// duplicate label.
    void mark(std::string label);

    /// Throws UsageError if a gate touches a wire outside the width.
    void validate() const;

    bool operator==(const Circuit &other) const = default;
};

struct Trace {
    StateVector final_state;
    std::map<std::string, StateVector> checkpoints;
};

/// Runs `circuit` on |x>|0...0>. Checkpoint states are stored only when
/// `record_checkpoints` is set.
Trace run_circuit(const Circuit &circuit, const BitString &x, bool record_checkpoints);

nlohmann::json gate_to_json(const Gate &gate);
nlohmann::json circuit_to_json(const Circuit &circuit);

/// Maps the oracle names used in a circuit dump back to oracles.
using OracleResolver = std::function<std::shared_ptr<const Oracle>(const std::string &name)>;

Gate gate_from_json(const nlohmann::json &j, const OracleResolver &resolve);
Circuit circuit_from_json(const nlohmann::json &j, const OracleResolver &resolve);

}  // namespace qqc

#endif
