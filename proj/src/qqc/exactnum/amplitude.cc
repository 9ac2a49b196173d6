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

#include "qqc/exactnum/amplitude.h"

#include <algorithm>
#include <sstream>

#include "qqc/errors.h"

namespace qqc {

namespace {

int big_sign(const BigInt &v) {
    return v.sign();
}

std::uint32_t trailing_zeros(const BigInt &v) {
    return static_cast<std::uint32_t>(boost::multiprecision::lsb(boost::multiprecision::abs(v)));
}

// Is |v| a power of two? Returns the exponent if so.
std::optional<std::uint32_t> power_of_two_exponent(const BigInt &v) {
    if (v.is_zero()) {
        return std::nullopt;
    }
    BigInt mag = boost::multiprecision::abs(v);
    auto k = trailing_zeros(mag);
    if ((mag >> k) != 1) {
        return std::nullopt;
    }
    return k;
}

}  // namespace

Amplitude::Amplitude(std::int64_t integer) : c0_(integer) {
}

Amplitude::Amplitude(BigInt integer) : c0_(std::move(integer)) {
}

Amplitude Amplitude::normalize(BigInt c0, BigInt c1, std::uint32_t e) {
    if (c0.is_zero() && c1.is_zero()) {
        return Amplitude{};
    }
    std::uint32_t k = e;
    if (!c0.is_zero()) {
        k = std::min(k, trailing_zeros(c0));
    }
    if (!c1.is_zero()) {
        k = std::min(k, trailing_zeros(c1));
    }
    if (k > 0) {
        c0 >>= k;
        c1 >>= k;
        e -= k;
    }
    return Amplitude(std::move(c0), std::move(c1), e);
}

Amplitude Amplitude::dyadic(BigInt num, std::uint32_t e) {
    return normalize(std::move(num), BigInt(0), e);
}

Amplitude Amplitude::inv_sqrt2() {
    return Amplitude(BigInt(0), BigInt(1), 1);
}

Amplitude Amplitude::sqrt2() {
    return Amplitude(BigInt(0), BigInt(1), 0);
}

Amplitude Amplitude::half() {
    return Amplitude(BigInt(1), BigInt(0), 1);
}

int Amplitude::sign() const {
    int s0 = big_sign(c0_);
    int s1 = big_sign(c1_);
    if (s0 >= 0 && s1 >= 0) {
        return (s0 | s1) ? 1 : 0;
    }
    if (s0 <= 0 && s1 <= 0) {
        return -1;
    }
    // Opposite signs: the term with the larger square wins. c0^2 == 2*c1^2 is
    // impossible for nonzero integers since sqrt(2) is irrational.
    BigInt sq0 = c0_ * c0_;
    BigInt sq1 = 2 * c1_ * c1_;
    if (s0 > 0) {
        return sq0 > sq1 ? 1 : -1;
    }
    return sq1 > sq0 ? 1 : -1;
}

std::optional<Amplitude> Amplitude::inverse() const {
    // 1 / ((c0 + c1 r) / 2^e) = 2^e (c0 - c1 r) / (c0^2 - 2 c1^2).
    BigInt norm = c0_ * c0_ - 2 * c1_ * c1_;
    auto k = power_of_two_exponent(norm);
    if (!k.has_value()) {
        return std::nullopt;
    }
    int s = norm.sign();
    Amplitude conj = normalize(s * c0_, -s * c1_, 0);
    return conj.scaled_pow2(static_cast<std::int64_t>(e_) - static_cast<std::int64_t>(*k));
}

Amplitude Amplitude::scaled_pow2(std::int64_t k) const {
    if (is_zero()) {
        return {};
    }
    if (k >= 0) {
        auto up = static_cast<std::uint32_t>(k);
        if (up <= e_) {
            return Amplitude(c0_, c1_, e_ - up);
        }
        return Amplitude(c0_ << (up - e_), c1_ << (up - e_), 0);
    }
    return normalize(c0_, c1_, e_ + static_cast<std::uint32_t>(-k));
}

Amplitude Amplitude::operator-() const {
    return Amplitude(-c0_, -c1_, e_);
}

Amplitude Amplitude::operator+(const Amplitude &other) const {
    if (e_ == other.e_) {
        return normalize(c0_ + other.c0_, c1_ + other.c1_, e_);
    }
    if (e_ > other.e_) {
        auto d = e_ - other.e_;
        return normalize(c0_ + (other.c0_ << d), c1_ + (other.c1_ << d), e_);
    }
    auto d = other.e_ - e_;
    return normalize((c0_ << d) + other.c0_, (c1_ << d) + other.c1_, other.e_);
}

Amplitude Amplitude::operator-(const Amplitude &other) const {
    return *this + (-other);
}

Amplitude Amplitude::operator*(const Amplitude &other) const {
    // (a0 + a1 r)(b0 + b1 r) = a0 b0 + 2 a1 b1 + (a0 b1 + a1 b0) r.
    BigInt r0 = c0_ * other.c0_ + 2 * c1_ * other.c1_;
    BigInt r1 = c0_ * other.c1_ + c1_ * other.c0_;
    return normalize(std::move(r0), std::move(r1), e_ + other.e_);
}

Amplitude &Amplitude::operator+=(const Amplitude &other) {
    *this = *this + other;
    return *this;
}

Amplitude &Amplitude::operator-=(const Amplitude &other) {
    *this = *this - other;
    return *this;
}

Amplitude &Amplitude::operator*=(const Amplitude &other) {
    *this = *this * other;
    return *this;
}

std::strong_ordering Amplitude::operator<=>(const Amplitude &other) const {
    int s = (*this - other).sign();
    if (s < 0) {
        return std::strong_ordering::less;
    }
    if (s > 0) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string Amplitude::str() const {
    std::ostringstream out;
    bool has0 = !c0_.is_zero();
    bool has1 = !c1_.is_zero();
    std::ostringstream numer;
    if (!has0 && !has1) {
        return "0";
    }
    if (has0) {
        numer << c0_;
    }
    if (has1) {
        if (has0) {
            numer << (c1_.sign() > 0 ? "+" : "-");
        } else if (c1_.sign() < 0) {
            numer << "-";
        }
        BigInt mag = boost::multiprecision::abs(c1_);
        if (mag != 1) {
            numer << mag << "*";
        }
        numer << "sqrt2";
    }
    if (e_ == 0) {
        return numer.str();
    }
    if (has0 && has1) {
        out << "(" << numer.str() << ")";
    } else {
        out << numer.str();
    }
    out << "/" << (BigInt(1) << e_);
    return out.str();
}

bool less_than(const Amplitude &a, const Amplitude &b) {
    return (b - a).sign() > 0;
}

std::ostream &operator<<(std::ostream &out, const Amplitude &a) {
    return out << a.str();
}

BigInt parse_bigint(const std::string &text) {
    if (text.empty()) {
        throw SpecError("empty integer string");
    }
    size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size() ||
        !std::all_of(text.begin() + static_cast<std::ptrdiff_t>(start), text.end(), [](char ch) {
            return ch >= '0' && ch <= '9';
        })) {
        throw SpecError("not a decimal integer: '" + text + "'");
    }
    return BigInt(text);
}

void to_json(nlohmann::json &j, const Amplitude &a) {
    j = nlohmann::json{{"c0", a.c0().str()}, {"c1", a.c1().str()}, {"e", a.e()}};
}

void from_json(const nlohmann::json &j, Amplitude &a) {
    if (!j.is_object() || !j.contains("c0") || !j.contains("c1") || !j.contains("e")) {
        throw SpecError("amplitude JSON must be an object with c0, c1, e");
    }
    if (!j.at("c0").is_string() || !j.at("c1").is_string() || !j.at("e").is_number_integer() ||
        j.at("e").get<std::int64_t>() < 0 || j.at("e").get<std::int64_t>() > UINT32_MAX) {
        throw SpecError("amplitude JSON: c0/c1 must be decimal strings and e a nonnegative integer");
    }
    a = Amplitude::normalize(
        parse_bigint(j.at("c0").get<std::string>()),
        parse_bigint(j.at("c1").get<std::string>()),
        j.at("e").get<std::uint32_t>());
}

}  // namespace qqc
