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

#include "qqc/quasistate/bit_string.h"

#include <bit>

#include "qqc/errors.h"

namespace qqc {

namespace {

std::uint64_t mask_for(int width) {
    return width >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << width) - 1);
}

}  // namespace

BitString::BitString(std::uint64_t bits, int width) : bits(bits), width(width) {
    if (width < 0 || width > kMaxWidth) {
        throw UsageError("bit string width " + std::to_string(width) + " outside [0, 64]");
    }
    if ((bits & ~mask_for(width)) != 0) {
        throw UsageError("bit string value does not fit in " + std::to_string(width) + " bits");
    }
}

BitString BitString::parse(std::string_view text) {
    if (text.size() > static_cast<size_t>(kMaxWidth)) {
        throw UsageError("bit string longer than 64 characters");
    }
    std::uint64_t v = 0;
    for (char ch : text) {
        if (ch != '0' && ch != '1') {
            throw UsageError("bit string may only contain '0' and '1': '" + std::string(text) + "'");
        }
        v = (v << 1) | static_cast<std::uint64_t>(ch == '1');
    }
    return BitString(v, static_cast<int>(text.size()));
}

BitString BitString::with(int index, bool value) const {
    std::uint64_t m = std::uint64_t{1} << (width - 1 - index);
    BitString out = *this;
    out.bits = value ? (bits | m) : (bits & ~m);
    return out;
}

BitString BitString::slice(int start, int len) const {
    if (start < 0 || len < 0 || start + len > width) {
        throw UsageError("bit string slice out of range");
    }
    if (len == 0) {
        return BitString(0, 0);
    }
    int shift = width - start - len;
    return BitString((bits >> shift) & mask_for(len), len);
}

int BitString::popcount() const {
    return std::popcount(bits);
}

std::string BitString::str() const {
    std::string out(static_cast<size_t>(width), '0');
    for (int k = 0; k < width; k++) {
        if ((*this)[k]) {
            out[static_cast<size_t>(k)] = '1';
        }
    }
    return out;
}

BitString concat(const BitString &left, const BitString &right) {
    if (left.width + right.width > kMaxWidth) {
        throw UsageError("concatenated bit string exceeds 64 bits");
    }
    std::uint64_t shifted = right.width >= 64 ? 0 : (left.bits << right.width);
    return BitString(shifted | right.bits, left.width + right.width);
}

}  // namespace qqc
