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

#include <random>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "gtest/gtest.h"
#include "qqc/errors.h"

using namespace qqc;
using Rational = boost::multiprecision::cpp_rational;
using Float = boost::multiprecision::cpp_bin_float_100;

namespace {

/// a + b*sqrt2 with rational a, b; arithmetic written out independently.
struct RootTwoPair {
    Rational a;
    Rational b;
    bool operator==(const RootTwoPair &other) const = default;
};

RootTwoPair as_pair(const Amplitude &v) {
    Rational scale = Rational(BigInt(1) << v.e());
    return {Rational(v.c0()) / scale, Rational(v.c1()) / scale};
}

RootTwoPair pair_mul(const RootTwoPair &x, const RootTwoPair &y) {
    return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
}

RootTwoPair pair_add(const RootTwoPair &x, const RootTwoPair &y) {
    return {x.a + y.a, x.b + y.b};
}

Float as_float(const Amplitude &v) {
    Float out = (Float(v.c0()) + Float(v.c1()) * boost::multiprecision::sqrt(Float(2)));
    return ldexp(out, -static_cast<int>(v.e()));
}

bool is_canonical(const Amplitude &v) {
    if (v.is_zero()) {
        return v.e() == 0;
    }
    return v.e() == 0 || (v.c0() & 1) != 0 || (v.c1() & 1) != 0;
}

Amplitude random_amplitude(std::mt19937_64 &rng, int max_bits = 40, int max_e = 12) {
    std::uniform_int_distribution<int> bits(0, max_bits);
    auto coefficient = [&]() {
        BigInt c = BigInt(rng()) >> (64 - std::max(1, bits(rng)));
        return (rng() & 1) ? BigInt(-c) : c;
    };
    BigInt c0 = coefficient();
    BigInt c1 = coefficient();
    return Amplitude::normalize(c0, c1, static_cast<std::uint32_t>(rng() % (max_e + 1)));
}

}  // namespace

TEST(amplitude, normalize_examples) {
    auto a = Amplitude::normalize(2, 0, 1);
    ASSERT_EQ(a.c0(), 1);
    ASSERT_EQ(a.c1(), 0);
    ASSERT_EQ(a.e(), 0u);

    auto z = Amplitude::normalize(0, 0, 7);
    ASSERT_TRUE(z.is_zero());
    ASSERT_EQ(z.e(), 0u);
    ASSERT_EQ(z, Amplitude());

    auto c = Amplitude::normalize(1, 1, 1);
    ASSERT_EQ(c.c0(), 1);
    ASSERT_EQ(c.c1(), 1);
    ASSERT_EQ(c.e(), 1u);

    auto d = Amplitude::normalize(12, -8, 5);
    ASSERT_EQ(d.c0(), 3);
    ASSERT_EQ(d.c1(), -2);
    ASSERT_EQ(d.e(), 3u);
}

TEST(amplitude, arithmetic_examples) {
    auto r = Amplitude::normalize(0, 1, 1);
    ASSERT_EQ(r * r, Amplitude::normalize(1, 0, 1));
    ASSERT_EQ(Amplitude(1) + Amplitude(-1), Amplitude());
    ASSERT_EQ(Amplitude::normalize(1, 1, 0) * Amplitude::normalize(1, -1, 0), Amplitude(-1));
    ASSERT_EQ(Amplitude::sqrt2() * Amplitude::inv_sqrt2(), Amplitude(1));
    ASSERT_EQ(Amplitude::half() + Amplitude::half(), Amplitude(1));
    ASSERT_EQ(-Amplitude::half(), Amplitude::dyadic(-1, 1));
    ASSERT_EQ(Amplitude(3) - Amplitude(5), Amplitude(-2));
}

TEST(amplitude, sign_examples) {
    ASSERT_EQ(Amplitude::normalize(-1, 1, 0).sign(), 1);
    ASSERT_EQ(Amplitude::normalize(3, -2, 0).sign(), 1);
    ASSERT_EQ(Amplitude::normalize(1, -1, 0).sign(), -1);
    ASSERT_EQ(Amplitude().sign(), 0);
    ASSERT_EQ(Amplitude::normalize(-3, 2, 4).sign(), -1);
    ASSERT_TRUE(less_than(Amplitude::normalize(1, 0, 1), Amplitude::inv_sqrt2()));
    ASSERT_FALSE(less_than(Amplitude::inv_sqrt2(), Amplitude::half()));
    ASSERT_FALSE(less_than(Amplitude::half(), Amplitude::half()));
    ASSERT_TRUE(Amplitude::half() < Amplitude(1));
}

TEST(amplitude, str) {
    ASSERT_EQ(Amplitude::half().str(), "1/2");
    ASSERT_EQ(Amplitude(-3).str(), "-3");
    ASSERT_EQ(Amplitude::normalize(1, 1, 2).str(), "(1+sqrt2)/4");
    ASSERT_EQ(Amplitude::inv_sqrt2().str(), "sqrt2/2");
    ASSERT_EQ(Amplitude().str(), "0");
}

TEST(amplitude, inverse) {
    ASSERT_EQ(Amplitude(2).inverse(), Amplitude::half());
    ASSERT_EQ(Amplitude::sqrt2().inverse(), Amplitude::inv_sqrt2());
    ASSERT_EQ(Amplitude::normalize(1, 1, 0).inverse(), Amplitude::normalize(-1, 1, 0));
    ASSERT_FALSE(Amplitude(3).inverse().has_value());
    ASSERT_FALSE(Amplitude().inverse().has_value());
    auto v = Amplitude::normalize(3, 2, 5);
    ASSERT_EQ(*v.inverse() * v, Amplitude(1));
}

TEST(amplitude, scaled_pow2) {
    ASSERT_EQ(Amplitude(3).scaled_pow2(-2), Amplitude::dyadic(3, 2));
    ASSERT_EQ(Amplitude::dyadic(3, 2).scaled_pow2(2), Amplitude(3));
    ASSERT_EQ(Amplitude::inv_sqrt2().scaled_pow2(1), Amplitude::sqrt2());
}

TEST(amplitude, json_round_trip) {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 200; k++) {
        auto v = random_amplitude(rng, 63, 40);
        nlohmann::json j = v;
        ASSERT_EQ(j.get<Amplitude>(), v);
        ASSERT_EQ(nlohmann::json::parse(j.dump()).get<Amplitude>(), v);
    }
    nlohmann::json raw{{"c0", "4"}, {"c1", "0"}, {"e", 2}};
    ASSERT_EQ(raw.get<Amplitude>(), Amplitude(1));
    nlohmann::json big{{"c0", "123456789012345678901234567890"}, {"c1", "-1"}, {"e", 0}};
    ASSERT_EQ(big.get<Amplitude>().c0(), BigInt("123456789012345678901234567890"));
    nlohmann::json junk{{"c0", "12x"}, {"c1", "0"}, {"e", 0}};
    ASSERT_THROW(junk.get<Amplitude>(), SpecError);
}

TEST(amplitude, ring_axioms_random) {
    std::mt19937_64 rng(2026);
    for (int k = 0; k < 500; k++) {
        auto a = random_amplitude(rng);
        auto b = random_amplitude(rng);
        auto c = random_amplitude(rng);
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a - a, Amplitude());
        ASSERT_EQ(a * Amplitude(1), a);
        ASSERT_TRUE(is_canonical(a + b));
        ASSERT_TRUE(is_canonical(a * b));
        ASSERT_TRUE(is_canonical(a - b));
        ASSERT_EQ(Amplitude::normalize(a.c0(), a.c1(), a.e()), a);
    }
}

TEST(amplitude, agrees_with_rational_pair_oracle) {
    std::mt19937_64 rng(99);
    for (int k = 0; k < 500; k++) {
        auto a = random_amplitude(rng);
        auto b = random_amplitude(rng);
        ASSERT_EQ(as_pair(a * b), pair_mul(as_pair(a), as_pair(b)));
        ASSERT_EQ(as_pair(a + b), pair_add(as_pair(a), as_pair(b)));
    }
}

TEST(amplitude, sign_agrees_with_float_oracle) {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 1000; k++) {
        auto a = random_amplitude(rng);
        Float f = as_float(a);
        int expected = f > 0 ? 1 : f < 0 ? -1 : 0;
        ASSERT_EQ(a.sign(), expected) << a.str();
        ASSERT_GE((a * a).sign(), 0);
        ASSERT_EQ((a * a).sign() == 0, a.is_zero());
    }
    // Near-cancelling values: c0^2 - 2 c1^2 = +-1 (Pell solutions).
    BigInt p = 1;
    BigInt q = 1;
    for (int k = 0; k < 60; k++) {
        auto v = Amplitude::normalize(p, -q, 0);
        ASSERT_EQ(v.sign(), (k % 2 == 0) ? -1 : 1);
        BigInt np = p + 2 * q;
        BigInt nq = p + q;
        p = np;
        q = nq;
    }
}

TEST(amplitude, dyadic_agrees_with_rationals) {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 300; k++) {
        auto a = Amplitude::dyadic(BigInt(static_cast<std::int64_t>(rng() % 2001) - 1000), rng() % 10);
        auto b = Amplitude::dyadic(BigInt(static_cast<std::int64_t>(rng() % 2001) - 1000), rng() % 10);
        ASSERT_TRUE((a * b).is_dyadic());
        ASSERT_EQ(as_pair(a * b).a, as_pair(a).a * as_pair(b).a);
        ASSERT_EQ(as_pair(a + b).a, as_pair(a).a + as_pair(b).a);
        ASSERT_EQ(less_than(a, b), as_pair(a).a < as_pair(b).a);
    }
}
