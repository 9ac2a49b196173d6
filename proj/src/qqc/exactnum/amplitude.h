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

#ifndef QQC_EXACTNUM_AMPLITUDE_H
#define QQC_EXACTNUM_AMPLITUDE_H

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"

namespace qqc {

using BigInt = boost::multiprecision::cpp_int;

/// An exact real number (c0 + c1*sqrt(2)) / 2^e with c0, c1 arbitrary-precision
/// integers and e >= 0.
///
/// Values are always kept canonical: when e > 0, c0 and c1 are not both even.
/// Zero is stored as (0, 0, 0). Two amplitudes are equal exactly when their
/// canonical triples are equal, so equality never approximates sqrt(2).
class Amplitude {
   public:
    Amplitude() = default;
    Amplitude(std::int64_t integer);  // NOLINT(google-explicit-constructor)
    explicit Amplitude(BigInt integer);

    /// Builds the canonical amplitude for the raw triple (c0, c1, e).
    static Amplitude normalize(BigInt c0, BigInt c1, std::uint32_t e);
    /// num / 2^e.
    static Amplitude dyadic(BigInt num, std::uint32_t e);
    /// 1/sqrt(2) = (0 + 1*sqrt(2)) / 2.
    static Amplitude inv_sqrt2();
    static Amplitude sqrt2();
    static Amplitude half();

    const BigInt &c0() const {
        return c0_;
    }
    const BigInt &c1() const {
        return c1_;
    }
    std::uint32_t e() const {
        return e_;
    }

    bool is_zero() const {
        return c0_.is_zero() && c1_.is_zero();
    }
    /// True when the value lies in Z[1/2] (no sqrt(2) part).
    bool is_dyadic() const {
        return c1_.is_zero();
    }
    /// Exact sign in {-1, 0, +1}.
    int sign() const;

    /// Multiplicative inverse, when it exists inside Z[sqrt2][1/2]. That is the
    /// case exactly when the norm c0^2 - 2*c1^2 is plus or minus a power of two.
    std::optional<Amplitude> inverse() const;

    /// Multiplies by 2^k (k may be negative).
    Amplitude scaled_pow2(std::int64_t k) const;

    Amplitude operator-() const;
    Amplitude operator+(const Amplitude &other) const;
    Amplitude operator-(const Amplitude &other) const;
    Amplitude operator*(const Amplitude &other) const;
    Amplitude &operator+=(const Amplitude &other);
    Amplitude &operator-=(const Amplitude &other);
    Amplitude &operator*=(const Amplitude &other);

    bool operator==(const Amplitude &other) const = default;
    std::strong_ordering operator<=>(const Amplitude &other) const;

    /// Human readable form, e.g. "1/2", "-3", "(1+sqrt2)/4", "sqrt2/2".
    std::string str() const;

   private:
    Amplitude(BigInt c0, BigInt c1, std::uint32_t e) : c0_(std::move(c0)), c1_(std::move(c1)), e_(e) {
    }

    BigInt c0_;
    BigInt c1_;
    std::uint32_t e_ = 0;
};

/// Exact comparison of two amplitudes.
bool less_than(const Amplitude &a, const Amplitude &b);

std::ostream &operator<<(std::ostream &out, const Amplitude &a);

/// JSON form {"c0": "<decimal>", "c1": "<decimal>", "e": <int>}. Parsing
/// accepts non-canonical triples and normalizes them.
void to_json(nlohmann::json &j, const Amplitude &a);
void from_json(const nlohmann::json &j, Amplitude &a);

/// Parses a decimal integer string into a BigInt; throws SpecError on junk.
BigInt parse_bigint(const std::string &text);

}  // namespace qqc

#endif
