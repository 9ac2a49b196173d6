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

#include "qqc/verifierkit/verifier.h"

#include <set>

#include "qqc/errors.h"

namespace qqc {

std::string backing_name(VerifierBacking backing) {
    switch (backing) {
        case VerifierBacking::Builtin:
            return "builtin";
        case VerifierBacking::TruthTable:
            return "truth-table";
        case VerifierBacking::Dsl:
            return "dsl";
        case VerifierBacking::Composite:
            return "composite";
    }
    return "?";
}

Verifier::Verifier(int n, int m, Predicate predicate, VerifierBacking backing, std::string name)
    : n_(n), m_(m), predicate_(std::move(predicate)), backing_(backing), name_(std::move(name)) {
    if (n < 0 || m < 1 || n + m > kMaxWidth) {
        throw UsageError(
            "verifier " + name_ + ": need n >= 0, m >= 1 and n + m <= 64 (got n=" + std::to_string(n) +
            ", m=" + std::to_string(m) + ")");
    }
    if (!predicate_) {
        throw UsageError("verifier " + name_ + " has no predicate");
    }
}

bool Verifier::operator()(const BitString &x, const BitString &b) const {
    if (x.width != n_) {
        throw UsageError(
            "verifier " + name_ + ": input length " + std::to_string(x.width) + " != n = " + std::to_string(n_));
    }
    if (b.width != m_) {
        throw UsageError(
            "verifier " + name_ + ": branch length " + std::to_string(b.width) + " != m = " + std::to_string(m_));
    }
    return predicate_(x, b);
}

VerifierPtr make_verifier(int n, int m, Verifier::Predicate predicate, VerifierBacking backing, std::string name) {
    return std::make_shared<const Verifier>(n, m, std::move(predicate), backing, std::move(name));
}

VerifierPtr verifier_from_table(const TruthTable &table, std::string name) {
    if (table.n < 0 || table.m < 1 || table.n > 30 || table.m > 30) {
        throw SpecError("truth table: need 0 <= n <= 30 and 1 <= m <= 30");
    }
    // accepted[x] holds the set of accepted branch values.
    std::vector<std::set<std::uint64_t>> accepted(std::size_t{1} << table.n);
    for (const auto &[xs, bs] : table.table) {
        BitString x;
        try {
            x = BitString::parse(xs);
        } catch (const UsageError &e) {
            throw SpecError("truth table key: " + std::string(e.what()));
        }
        if (x.width != table.n) {
            throw SpecError("truth table key '" + xs + "' does not have n = " + std::to_string(table.n) + " bits");
        }
        for (const auto &bstr : bs) {
            BitString b;
            try {
                b = BitString::parse(bstr);
            } catch (const UsageError &e) {
                throw SpecError("truth table entry: " + std::string(e.what()));
            }
            if (b.width != table.m) {
                throw SpecError(
                    "truth table entry '" + bstr + "' does not have m = " + std::to_string(table.m) + " bits");
            }
            accepted[x.bits].insert(b.bits);
        }
    }
    auto shared = std::make_shared<const std::vector<std::set<std::uint64_t>>>(std::move(accepted));
    return make_verifier(
        table.n,
        table.m,
        [shared](const BitString &x, const BitString &b) {
            return (*shared)[x.bits].count(b.bits) != 0;
        },
        VerifierBacking::TruthTable,
        std::move(name));
}

TruthTable tabulate(const Verifier &verifier) {
    TruthTable out;
    out.n = verifier.n();
    out.m = verifier.m();
    for (std::uint64_t xv = 0; xv < (std::uint64_t{1} << out.n); xv++) {
        BitString x(xv, out.n);
        auto &row = out.table[x.str()];
        for (std::uint64_t bv = 0; bv < (std::uint64_t{1} << out.m); bv++) {
            BitString b(bv, out.m);
            if (verifier(x, b)) {
                row.push_back(b.str());
            }
        }
    }
    return out;
}

void to_json(nlohmann::json &j, const TruthTable &t) {
    j = nlohmann::json{{"n", t.n}, {"m", t.m}, {"table", t.table}};
}

void from_json(const nlohmann::json &j, TruthTable &t) {
    if (!j.is_object() || !j.contains("n") || !j.contains("m") || !j.contains("table")) {
        throw SpecError("truth table JSON needs n, m and table");
    }
    if (!j.at("n").is_number_integer() || !j.at("m").is_number_integer() || !j.at("table").is_object()) {
        throw SpecError("truth table JSON: n, m must be integers and table an object");
    }
    t.n = j.at("n").get<int>();
    t.m = j.at("m").get<int>();
    t.table.clear();
    for (const auto &[key, value] : j.at("table").items()) {
        if (!value.is_array()) {
            throw SpecError("truth table row '" + key + "' must be an array of bit strings");
        }
        auto &row = t.table[key];
        for (const auto &b : value) {
            if (!b.is_string()) {
                throw SpecError("truth table row '" + key + "' must contain strings");
            }
            row.push_back(b.get<std::string>());
        }
    }
}

HalfGapFunction HalfGapFunction::tabulated(std::map<int, BigInt> values) {
    HalfGapFunction h;
    h.kind = Kind::Tabulated;
    h.table = std::move(values);
    return h;
}

HalfGapFunction HalfGapFunction::power(BigInt base, Affine exponent) {
    if (base < 1) {
        throw SpecError("power half-gap function needs base M >= 1");
    }
    HalfGapFunction h;
    h.kind = Kind::Power;
    h.base = std::move(base);
    h.exponent = exponent;
    return h;
}

BigInt HalfGapFunction::operator()(int n) const {
    BigInt value;
    if (kind == Kind::Tabulated) {
        auto it = table.find(n);
        if (it == table.end()) {
            throw PreconditionError("half-gap function has no value for n = " + std::to_string(n), std::to_string(n));
        }
        value = it->second;
    } else {
        std::int64_t t = exponent(n);
        if (t < 0) {
            throw PreconditionError(
                "half-gap exponent t(" + std::to_string(n) + ") = " + std::to_string(t) + " is negative",
                std::to_string(n));
        }
        value = boost::multiprecision::pow(base, static_cast<unsigned>(t));
    }
    value += offset;
    if (value < 1) {
        throw PreconditionError("half-gap h(" + std::to_string(n) + ") must be >= 1", std::to_string(n));
    }
    return value;
}

HalfGapFunction HalfGapFunction::shifted(const BigInt &delta) const {
    HalfGapFunction out = *this;
    out.offset += delta;
    return out;
}

void to_json(nlohmann::json &j, const HalfGapFunction &h) {
    if (h.kind == HalfGapFunction::Kind::Tabulated) {
        nlohmann::json values = nlohmann::json::object();
        for (const auto &[n, v] : h.table) {
            values[std::to_string(n)] = v.str();
        }
        j = nlohmann::json{{"kind", "tabulated"}, {"values", values}};
    } else {
        j = nlohmann::json{
            {"kind", "power"},
            {"M", h.base.str()},
            {"t", {{"a", h.exponent.a}, {"b", h.exponent.b}}},
        };
    }
    if (!h.offset.is_zero()) {
        j["offset"] = h.offset.str();
    }
}

namespace {

BigInt json_bigint(const nlohmann::json &j, const std::string &what) {
    if (j.is_string()) {
        return parse_bigint(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return BigInt(j.get<std::int64_t>());
    }
    throw SpecError(what + " must be an integer or a decimal string");
}

}  // namespace

void from_json(const nlohmann::json &j, HalfGapFunction &h) {
    if (!j.is_object() || !j.contains("kind")) {
        throw SpecError("half-gap spec must be an object with a kind");
    }
    auto kind = j.at("kind").get<std::string>();
    if (kind == "tabulated") {
        if (!j.contains("values") || !j.at("values").is_object()) {
            throw SpecError("tabulated half-gap spec needs a values object");
        }
        std::map<int, BigInt> values;
        for (const auto &[key, v] : j.at("values").items()) {
            int n = 0;
            try {
                n = std::stoi(key);
            } catch (const std::exception &) {
                throw SpecError("tabulated half-gap key '" + key + "' is not an integer");
            }
            values[n] = json_bigint(v, "half-gap value");
        }
        h = HalfGapFunction::tabulated(std::move(values));
    } else if (kind == "power") {
        if (!j.contains("M") || !j.contains("t") || !j.at("t").is_object()) {
            throw SpecError("power half-gap spec needs M and t = {a, b}");
        }
        Affine t{j.at("t").value("a", std::int64_t{0}), j.at("t").value("b", std::int64_t{0})};
        h = HalfGapFunction::power(json_bigint(j.at("M"), "M"), t);
    } else {
        throw SpecError("unknown half-gap kind '" + kind + "'");
    }
    if (j.contains("offset")) {
        h.offset = json_bigint(j.at("offset"), "offset");
    }
}

DualVerifierPair make_dual_pair(VerifierPtr v0, VerifierPtr v1, std::optional<HalfGapFunction> h) {
    if (v0 == nullptr || v1 == nullptr) {
        throw UsageError("dual pair needs two verifiers");
    }
    if (v0->n() != v1->n()) {
        throw UsageError("dual pair verifiers disagree on n");
    }
    if (v0->m() != v1->m()) {
        throw UsageError(
            "dual pair verifiers disagree on m (" + std::to_string(v0->m()) + " vs " + std::to_string(v1->m()) +
            "); equalize branch lengths first");
    }
    return DualVerifierPair{std::move(v0), std::move(v1), std::move(h)};
}

}  // namespace qqc
