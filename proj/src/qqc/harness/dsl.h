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

#ifndef QQC_HARNESS_DSL_H
#define QQC_HARNESS_DSL_H

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qqc/errors.h"
#include "qqc/verifierkit/verifier.h"

namespace qqc {

/// Boolean expression over the bits of x and b.
///
/// Grammar, loosest binding first:
///   or      := xor ('|' xor)*
///   xor     := and ('^' and)*
///   and     := unary ('&' unary)*
///   unary   := '!' unary | primary
///   primary := '0' | '1' | 'x' '[' int ']' | 'b' '[' int ']'
///            | 'parity' '(' ('x' | 'b' | 'x' '&' 'b') ')' | '(' or ')'
struct DslExpr {
    enum class Kind { Const, XBit, BBit, Not, And, Xor, Or, ParityX, ParityB, ParityXB };
    Kind kind = Kind::Const;
    /// Literal value for Const, bit index for XBit / BBit.
    int value = 0;
    std::vector<DslExpr> args;

    static DslExpr constant(bool v);
    static DslExpr x_bit(int i);
    static DslExpr b_bit(int j);
    static DslExpr negate(DslExpr e);
    static DslExpr binary(Kind kind, DslExpr lhs, DslExpr rhs);
    static DslExpr fold(Kind kind);

    bool operator==(const DslExpr &other) const = default;
};

/// A syntax or range error at a position (1-based line and column).
struct DslError : SpecError {
    DslError(const std::string &message, int line, int column, std::set<std::string> expected);
    std::string message;
    int line;
    int column;
    std::set<std::string> expected;
};

/// Parses `text`. When n (or m) is non-negative, x (or b) indices are
/// checked against it. Throws DslError.
DslExpr parse_dsl(std::string_view text, int n = -1, int m = -1);

/// Canonical text with the fewest parentheses that reparse to the same tree.
std::string print_dsl(const DslExpr &expr);

/// parity(x & b) runs over the first min(n, m) positions.
bool eval_dsl(const DslExpr &expr, const BitString &x, const BitString &b);

/// Largest x and b indices referenced (-1 when none).
int max_x_index(const DslExpr &expr);
int max_b_index(const DslExpr &expr);

VerifierPtr verifier_from_dsl(const DslExpr &expr, int n, int m, std::string name);

}  // namespace qqc

#endif
