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

#ifndef QQC_QUASISTATE_BIT_STRING_H
#define QQC_QUASISTATE_BIT_STRING_H

#include <cstdint>
#include <string>
#include <string_view>

namespace qqc {

constexpr int kMaxWidth = 64;

/// A fixed-width bit string of at most 64 bits.
///
/// Index 0 is the leftmost character of the textual form and the most
/// significant bit of `bits`, so numeric order on `bits` coincides with
/// lexicographic order on the text.
struct BitString {
    std::uint64_t bits = 0;
    int width = 0;

    BitString() = default;
    BitString(std::uint64_t bits, int width);

    static BitString parse(std::string_view text);

    bool operator[](int index) const {
        return (bits >> (width - 1 - index)) & 1U;
    }
    BitString with(int index, bool value) const;
    BitString flipped(int index) const {
        return with(index, !(*this)[index]);
    }
    /// Bits [start, start + len) as a new string.
    BitString slice(int start, int len) const;
    int popcount() const;
    bool is_zero() const {
        return bits == 0;
    }
    std::string str() const;

    bool operator==(const BitString &other) const = default;
    auto operator<=>(const BitString &other) const = default;
};

/// Labels of one basis vector of a statevector.
using BasisState = BitString;

/// Concatenation of bit strings, left to right.
BitString concat(const BitString &left, const BitString &right);

}  // namespace qqc

#endif
