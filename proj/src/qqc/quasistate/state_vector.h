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

#ifndef QQC_QUASISTATE_STATE_VECTOR_H
#define QQC_QUASISTATE_STATE_VECTOR_H

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qqc/exactnum/amplitude.h"
#include "qqc/quasistate/bit_string.h"
#include "qqc/quasistate/gate.h"

namespace qqc {

/// Sparse exact statevector over a fixed number of wires.
///
/// Terms are keyed by basis state; no stored amplitude is ever zero. The map
/// order is lexicographic on the basis label.
class StateVector {
   public:
    using Terms = std::map<std::uint64_t, Amplitude>;

    StateVector() = default;
    explicit StateVector(int width);
    /// |basis> with amplitude 1.
    static StateVector basis(const BitString &basis);

    int width() const {
        return width_;
    }
    const Terms &terms() const {
        return terms_;
    }
    size_t size() const {
        return terms_.size();
    }
    bool empty() const {
        return terms_.empty();
    }

    /// Amplitude of one basis state (zero when absent).
    Amplitude at(const BitString &basis) const;
    /// Adds `amp` to the amplitude of `basis`, pruning if the sum vanishes.
    void add(const BitString &basis, const Amplitude &amp);

    StateVector operator+(const StateVector &other) const;
    StateVector operator-(const StateVector &other) const;
    StateVector operator*(const Amplitude &scalar) const;

    bool operator==(const StateVector &other) const = default;

    std::string str() const;

   private:
    void check_width(const BitString &basis) const;

    int width_ = 0;
    Terms terms_;
};

/// Exact linear action of `gate` on `state`. Throws UsageError for wires out
/// of range, repeated wires, or an ORACLE whose arity does not match.
StateVector apply(const StateVector &state, const Gate &gate);
StateVector apply_all(StateVector state, const std::vector<Gate> &gates);

/// Sum of squared amplitudes.
Amplitude norm_sq(const StateVector &state);

/// Every stored term matching `pattern`, lexicographically. Pattern characters
/// are '0', '1', or a wildcard ('*', '.', '?', '-').
std::vector<std::pair<BasisState, Amplitude>> amplitude_of(const StateVector &state, std::string_view pattern);

struct Projection {
    Amplitude success_mass;
    StateVector conditional;
};

/// Projects `wire` onto `value`. The conditional state is left unnormalized;
/// probabilities are ratios of squared norms. Throws UsageError on the zero
/// state.
Projection project(const StateVector &state, int wire, bool value);

/// [{"basis": "0101", "amp": {...}}, ...] in lexicographic order.
nlohmann::json state_to_json(const StateVector &state);
StateVector state_from_json(const nlohmann::json &j, int width);

}  // namespace qqc

#endif
