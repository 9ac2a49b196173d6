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

#ifndef QQC_QUASISTATE_GATE_H
#define QQC_QUASISTATE_GATE_H

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qqc/exactnum/amplitude.h"
#include "qqc/quasistate/bit_string.h"

namespace qqc {

/// A classical predicate f(x, b) that an ORACLE gate XORs onto a target wire.
class Oracle {
   public:
    virtual ~Oracle() = default;
    virtual int input_width() const = 0;
    virtual int branch_width() const = 0;
    virtual bool eval(const BitString &x, const BitString &b) const = 0;
    virtual std::string name() const = 0;
};

enum class GateKind {
    X,
    CNOT,
    TOFFOLI,
    MCX,
    SWAP,
    CYCLE,
    H,
    S,
    B,
    G,
    A,
    N,
    D,
    PROJ0,
    PROJ1,
    ORACLE,
};

std::string_view gate_kind_name(GateKind kind);
std::optional<GateKind> gate_kind_from_name(std::string_view name);

/// Conditions a gate on `wire` holding `value`.
struct Control {
    int wire = 0;
    bool value = true;

    bool operator==(const Control &other) const = default;
};

/// One gate application.
///
/// Wire conventions per kind:
///   X, H, S, B, G, A, N, PROJ0, PROJ1: {target}
///   CNOT: {control, target}; TOFFOLI: {c1, c2, target}
///   MCX: {controls..., target} with `polarity[i]` the required control value
///   SWAP: {w0, w1}
///   CYCLE: {w0, ..., wk}; wire w_i receives the old value of w_{i+1} and wk
///          receives the old value of w0 (reversed when inverted)
///   D: {high, low}; |0y> -> |0y>, |1y> -> |1y> - |00>
///   ORACLE: {x wires..., b wires..., target}; target ^= f(x, b)
///
/// The matrices of the one-wire non-unitary kinds, as maps on |0>, |1>:
///   S = [[1,1],[0,1]], B = diag(1/2, 1), G = diag(M, 1), A = diag(h, 1),
///   N = diag(p, 1). `param` holds M, h or p.
///
/// `controls` adds extra conditioning on top of the kind's own controls; it is
/// how a whole sub-circuit is made conditional.
struct Gate {
    GateKind kind = GateKind::X;
    std::vector<int> wires;
    std::vector<bool> polarity;
    std::vector<Control> controls;
    Amplitude param;
    bool inverted = false;
    std::shared_ptr<const Oracle> oracle;

    static Gate x(int target);
    static Gate cnot(int control, int target);
    static Gate toffoli(int c1, int c2, int target);
    static Gate mcx(std::vector<int> control_wires, std::vector<bool> polarity, int target);
    static Gate swap(int w0, int w1);
    static Gate cycle(std::vector<int> wires);
    static Gate h(int target);
    static Gate s(int target);
    static Gate b(int target);
    static Gate g(int target, Amplitude m);
    static Gate a(int target, Amplitude h);
    static Gate n(int target, Amplitude p);
    static Gate d(int high, int low);
    static Gate proj0(int target);
    static Gate proj1(int target);
    static Gate oracle_gate(
        std::shared_ptr<const Oracle> oracle, std::vector<int> x_wires, std::vector<int> b_wires, int target);

    /// Returns a copy conditioned additionally on `control`.
    Gate with_control(Control control) const;

    /// True for kinds that only permute basis states.
    bool is_classical() const;
    /// True when the kind is unitary (classical gates and H).
    bool is_unitary() const;
    /// True when an inverse exists; diagonal kinds need their parameter to be a
    /// unit of the amplitude ring.
    bool is_invertible() const;
    /// The inverse gate. Throws NotInvertibleError for projectors, N(0) and
    /// diagonal gates whose parameter has no ring inverse.
    Gate inverse() const;

    /// The diagonal entry applied to |0> for B, G, A, N (after inversion).
    Amplitude diagonal_entry() const;

    std::string str() const;

    bool operator==(const Gate &other) const;
};

}  // namespace qqc

#endif
