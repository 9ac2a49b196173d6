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

#ifndef QQC_HARNESS_PROBLEM_SPEC_H
#define QQC_HARNESS_PROBLEM_SPEC_H

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qqc/verifierkit/verifier.h"

namespace qqc {

/// Branching length as a function of n: affine a*n + b, or a per-n table.
struct LengthMap {
    std::optional<Affine> affine;
    std::map<int, int> table;

    static LengthMap constant(int m);
    /// Throws SpecError when n is not covered or the value is below 1.
    int operator()(int n) const;

    bool operator==(const LengthMap &other) const = default;
};

enum class SourceKind { Dsl, TableFile, Builtin };
enum class DualKind {
    /// v0 and v1 are both given.
    GivenPair,
    /// One LWPP base verifier; the pair comes from the lemma construction.
    DeriveViaLemma,
    /// One verifier used for both v0 and v1 (gap reports only).
    Single,
};

/// A problem description, as read from a JSON spec file:
///
///   {
///     "name": "...",
///     "n_range": [lo, hi],
///     "m": {"a": 1, "b": 0} | {"table": {"2": 3, ...}},
///     "m1": optional, branching length of v1 when it differs,
///     "source": {"kind": "dsl", "v0": "...", "v1": "..."}
///             | {"kind": "dsl", "expr": "..."}
///             | {"kind": "table-file", "v0": "path", "v1": "path"}
///             | {"kind": "table-file", "path": "path"}
///             | {"kind": "builtin", "name": "ALLZERO"},
///     "h": optional half-gap function,
///     "dual": "given-pair" | "derive-via-lemma" | "single",
///     "seed": optional, for RANDOM
///   }
///
/// Table-file paths are resolved against `base_dir`.
struct ProblemSpec {
    std::string name;
    int n_min = 1;
    int n_max = 1;
    LengthMap m;
    std::optional<LengthMap> m1;
    SourceKind source = SourceKind::Dsl;
    /// Expressions (dsl), paths (table-file) or the builtin name. Single
    /// verifier directives use only `v0`.
    std::string v0;
    std::string v1;
    std::optional<HalfGapFunction> h;
    DualKind dual = DualKind::GivenPair;
    std::optional<std::uint64_t> seed;
    std::string base_dir;

    /// Throws SpecError on any schema violation, including DSL errors at
    /// every n in range.
    void validate() const;

    /// The pair at length n. Branch-length equalization and the LWPP lemma
    /// are applied as needed and logged to `transforms` when given.
    DualVerifierPair build(int n, std::vector<std::string> *transforms = nullptr) const;

    /// Branching length of the built pair at n.
    int pair_m(int n) const;

    bool operator==(const ProblemSpec &other) const = default;
};

nlohmann::json problem_spec_to_json(const ProblemSpec &spec);
/// Parses and validates. Throws SpecError.
ProblemSpec problem_spec_from_json(const nlohmann::json &j, std::string base_dir = ".");
ProblemSpec load_problem_spec(const std::string &path);

/// `arg` is a spec file path or a builtin name (RANDOM takes `seed`, default 1).
ProblemSpec resolve_problem(const std::string &arg, std::optional<std::uint64_t> seed);

std::string source_kind_name(SourceKind kind);
std::string dual_kind_name(DualKind kind);

}  // namespace qqc

#endif
