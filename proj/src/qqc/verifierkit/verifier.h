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

#ifndef QQC_VERIFIERKIT_VERIFIER_H
#define QQC_VERIFIERKIT_VERIFIER_H

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qqc/exactnum/amplitude.h"
#include "qqc/quasistate/bit_string.h"
#include "qqc/quasistate/gate.h"

namespace qqc {

enum class VerifierBacking { Builtin, TruthTable, Dsl, Composite };

std::string backing_name(VerifierBacking backing);

/// The accept predicate f(x, b) of one branch b of a nondeterministic machine
/// on input x, for a fixed input length n and branching length m.
class Verifier final : public Oracle {
   public:
    using Predicate = std::function<bool(const BitString &x, const BitString &b)>;

    Verifier(int n, int m, Predicate predicate, VerifierBacking backing, std::string name);

    int n() const {
        return n_;
    }
    int m() const {
        return m_;
    }
    VerifierBacking backing() const {
        return backing_;
    }

    /// f(x, b). Throws UsageError when the widths are not (n, m).
    bool operator()(const BitString &x, const BitString &b) const;

    int input_width() const override {
        return n_;
    }
    int branch_width() const override {
        return m_;
    }
    bool eval(const BitString &x, const BitString &b) const override {
        return (*this)(x, b);
    }
    std::string name() const override {
        return name_;
    }

   private:
    int n_;
    int m_;
    Predicate predicate_;
    VerifierBacking backing_;
    std::string name_;
};

using VerifierPtr = std::shared_ptr<const Verifier>;

VerifierPtr make_verifier(int n, int m, Verifier::Predicate predicate, VerifierBacking backing, std::string name);

/// Accepted branch sets per input, as read from or written to a truth-table
/// file: {"n": int, "m": int, "table": {"<x bits>": ["<b bits>", ...]}}.
/// Inputs missing from the table accept no branch.
struct TruthTable {
    int n = 0;
    int m = 0;
    std::map<std::string, std::vector<std::string>> table;

    bool operator==(const TruthTable &other) const = default;
};

VerifierPtr verifier_from_table(const TruthTable &table, std::string name);
/// Tabulates any verifier by enumeration.
TruthTable tabulate(const Verifier &verifier);

void to_json(nlohmann::json &j, const TruthTable &t);
void from_json(const nlohmann::json &j, TruthTable &t);

/// Affine map n -> a*n + b.
struct Affine {
    std::int64_t a = 0;
    std::int64_t b = 0;

    std::int64_t operator()(std::int64_t n) const {
        return a * n + b;
    }
    bool operator==(const Affine &other) const = default;
};

/// The length-dependent half-gap h(1^n), either tabulated or a power M^t(n).
struct HalfGapFunction {
    enum class Kind { Tabulated, Power };

    Kind kind = Kind::Tabulated;
    std::map<int, BigInt> table;
    BigInt base = 1;
    Affine exponent;
    /// Added to every value; nonzero only for deliberately corrupted witnesses.
    BigInt offset = 0;

    static HalfGapFunction tabulated(std::map<int, BigInt> values);
    static HalfGapFunction power(BigInt base, Affine exponent);

    /// h(n). Throws PreconditionError if n is not covered, or if the value
    /// would be below 1.
    BigInt operator()(int n) const;
    /// Returns a function that adds `offset` to every value (fault injection).
    HalfGapFunction shifted(const BigInt &offset) const;

    bool operator==(const HalfGapFunction &other) const = default;
};

void to_json(nlohmann::json &j, const HalfGapFunction &h);
void from_json(const nlohmann::json &j, HalfGapFunction &h);

/// Verifiers for a Ceq-style machine (v0, zero gap on YES inputs) and a
/// co-Ceq-style machine (v1, zero gap on NO inputs) with a shared branching
/// length.
struct DualVerifierPair {
    VerifierPtr v0;
    VerifierPtr v1;
    std::optional<HalfGapFunction> h;

    int n() const {
        return v0->n();
    }
    int m() const {
        return v0->m();
    }
};

/// Checks the structural invariants (same n, same m). Throws UsageError.
DualVerifierPair make_dual_pair(VerifierPtr v0, VerifierPtr v1, std::optional<HalfGapFunction> h = std::nullopt);

}  // namespace qqc

#endif
