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

#include <fstream>

#include "gtest/gtest.h"
#include "qqc/errors.h"
#include "qqc/harness/commands.h"
#include "qqc/harness/dsl.h"
#include "qqc/qqc.h"
#include "qqc/verifierkit/catalog.h"

using namespace qqc;

namespace {

std::string data_path(const std::string &name) {
    return std::string(QQC_TEST_DATA_DIR) + "/" + name;
}

std::vector<std::string> corpus() {
    std::ifstream in(data_path("dsl_corpus.txt"));
    std::vector<std::string> out;
    for (std::string line; std::getline(in, line);) {
        if (!line.empty()) {
            out.push_back(line);
        }
    }
    return out;
}

CommandOptions with_n(int n) {
    CommandOptions o;
    o.n = n;
    return o;
}

}  // namespace

TEST(dsl, examples) {
    auto e = parse_dsl("parity(x & b)", 2, 2);
    ASSERT_EQ(e.kind, DslExpr::Kind::ParityXB);
    auto v = verifier_from_dsl(e, 2, 2, "dsl");
    auto reference = allzero_base(2);
    for (const auto &x : all_inputs(2)) {
        for (const auto &b : all_inputs(2)) {
            ASSERT_EQ((*v)(x, b), (*reference)(x, b));
        }
    }
    auto xr = parse_dsl("x[0] ^ b[1]");
    ASSERT_EQ(xr.kind, DslExpr::Kind::Xor);
    ASSERT_EQ(xr.args[0], DslExpr::x_bit(0));
    ASSERT_EQ(xr.args[1], DslExpr::b_bit(1));
}

TEST(dsl, precedence) {
    auto e = parse_dsl("x[0] | b[0] ^ x[1] & !b[1]");
    ASSERT_EQ(e.kind, DslExpr::Kind::Or);
    ASSERT_EQ(e.args[1].kind, DslExpr::Kind::Xor);
    ASSERT_EQ(e.args[1].args[1].kind, DslExpr::Kind::And);
    ASSERT_EQ(e.args[1].args[1].args[1].kind, DslExpr::Kind::Not);
    ASSERT_EQ(print_dsl(parse_dsl("(x[0] | b[0]) & b[1]")), "(x[0] | b[0]) & b[1]");
    ASSERT_EQ(print_dsl(parse_dsl("((x[0]) & (b[1]))")), "x[0] & b[1]");
    ASSERT_EQ(print_dsl(parse_dsl("x[0] & (b[0] & b[1])")), "x[0] & (b[0] & b[1])");
}

TEST(dsl, index_error_is_positioned) {
    try {
        parse_dsl("b[9]", 2, 2);
        FAIL() << "expected DslError";
    } catch (const DslError &e) {
        ASSERT_EQ(e.line, 1);
        ASSERT_EQ(e.column, 3);
        ASSERT_NE(std::string(e.what()).find("out of range"), std::string::npos);
    }
}

TEST(dsl, syntax_errors) {
    try {
        parse_dsl("x[0] &\n  y[1]");
        FAIL();
    } catch (const DslError &e) {
        ASSERT_EQ(e.line, 2);
        ASSERT_EQ(e.column, 3);
        ASSERT_TRUE(e.expected.contains("x"));
        ASSERT_NE(e.message.find("unknown identifier 'y'"), std::string::npos);
    }
    try {
        parse_dsl("(x[0] | b[0]");
        FAIL();
    } catch (const DslError &e) {
        ASSERT_NE(e.message.find("unbalanced"), std::string::npos);
        ASSERT_EQ(e.expected, std::set<std::string>{")"});
    }
    try {
        parse_dsl("x[0])");
        FAIL();
    } catch (const DslError &e) {
        ASSERT_NE(e.message.find("unbalanced"), std::string::npos);
        ASSERT_EQ(e.column, 5);
    }
    ASSERT_THROW(parse_dsl(""), DslError);
    ASSERT_THROW(parse_dsl("2"), DslError);
    ASSERT_THROW(parse_dsl("x[0] $ b[0]"), DslError);
    ASSERT_THROW(parse_dsl("parity(b & x)"), DslError);
    ASSERT_THROW(parse_dsl("x 0"), DslError);
}

TEST(dsl, corpus_fixpoint) {
    auto lines = corpus();
    ASSERT_EQ(lines.size(), 30u);
    for (const auto &line : lines) {
        auto e = parse_dsl(line, 2, 2);
        auto printed = print_dsl(e);
        auto again = parse_dsl(printed, 2, 2);
        ASSERT_EQ(again, e) << line;
        ASSERT_EQ(print_dsl(again), printed) << line;
        for (const auto &x : all_inputs(2)) {
            for (const auto &b : all_inputs(2)) {
                bool first = eval_dsl(e, x, b);
                ASSERT_EQ(eval_dsl(again, x, b), first);
                ASSERT_EQ(eval_dsl(e, x, b), first);
            }
        }
    }
}

TEST(problem_spec, load_and_round_trip) {
    for (const char *name : {"allzero_dsl.json", "reject3.json", "parity_pair.json"}) {
        auto spec = load_problem_spec(data_path(name));
        auto j = problem_spec_to_json(spec);
        auto back = problem_spec_from_json(nlohmann::json::parse(j.dump()), spec.base_dir);
        ASSERT_EQ(back, spec) << name;
    }
    auto builtin = resolve_problem("allzero", std::nullopt);
    ASSERT_EQ(problem_spec_from_json(problem_spec_to_json(builtin), builtin.base_dir), builtin);
    auto random = resolve_problem("RANDOM", 17);
    ASSERT_EQ(random.seed, 17u);
    ASSERT_EQ(problem_spec_from_json(problem_spec_to_json(random), random.base_dir), random);
}

TEST(problem_spec, schema_errors) {
    auto good = nlohmann::json::parse(R"({"name": "A", "n_range": [1, 2], "m": 2,
        "source": {"kind": "dsl", "v0": "b[0]", "v1": "b[1]"}})");
    ASSERT_NO_THROW(problem_spec_from_json(good));
    auto bad = good;
    bad["source"]["v0"] = "b[5]";
    ASSERT_THROW(problem_spec_from_json(bad), DslError);
    bad = good;
    bad["extra"] = 1;
    ASSERT_THROW(problem_spec_from_json(bad), SpecError);
    bad = good;
    bad["n_range"] = {3, 1};
    ASSERT_THROW(problem_spec_from_json(bad), SpecError);
    bad = good;
    bad["m"] = 0;
    ASSERT_THROW(problem_spec_from_json(bad), SpecError);
    bad = good;
    bad["dual"] = "derive-via-lemma";
    ASSERT_THROW(problem_spec_from_json(bad), SpecError);
    bad = good;
    bad.erase("source");
    ASSERT_THROW(problem_spec_from_json(bad), SpecError);
    ASSERT_THROW(resolve_problem("NO-SUCH-PROBLEM", std::nullopt), SpecError);
}

TEST(problem_spec, dsl_lemma_matches_builtin) {
    auto spec = load_problem_spec(data_path("allzero_dsl.json"));
    std::vector<std::string> transforms;
    auto pair = spec.build(2, &transforms);
    ASSERT_EQ(transforms.size(), 1u);
    auto reference = find_builtin("ALLZERO")->build(2);
    for (const auto &x : all_inputs(2)) {
        ASSERT_EQ(gap_stats(*pair.v0, x).delta, gap_stats(*reference.v0, x).delta);
        ASSERT_EQ(gap_stats(*pair.v1, x).delta, gap_stats(*reference.v1, x).delta);
    }
}

TEST(problem_spec, given_pair_is_equalized) {
    auto spec = load_problem_spec(data_path("parity_pair.json"));
    std::vector<std::string> transforms;
    auto pair = spec.build(3, &transforms);
    ASSERT_EQ(pair.m(), 2);
    ASSERT_EQ(transforms.size(), 1u);
    ASSERT_EQ(dual_sweep(pair).size(), 8u);
}

TEST(commands, gap_on_constant_reject) {
    auto spec = load_problem_spec(data_path("reject3.json"));
    CommandOptions o;
    o.input = "01";
    auto result = command_gap(spec, o);
    ASSERT_EQ(result.exit_code, 0);
    ASSERT_EQ(result.report["entries"][0]["stats"][0]["Delta"], 4);
    auto report = gap_report_from_json(nlohmann::json::parse(result.report.dump()));
    ASSERT_EQ(gap_report_to_json(report), result.report);
}

TEST(commands, verify_allzero_all_constructions) {
    auto spec = resolve_problem("ALLZERO", std::nullopt);
    auto result = command_verify(spec, with_n(2));
    ASSERT_EQ(result.exit_code, 0) << result.report.dump(2);
    ASSERT_EQ(result.report["constructions"].size(), 6u);
    for (const auto &section : result.report["constructions"]) {
        ASSERT_EQ(section["passed"], 4);
    }
}

TEST(commands, verify_with_corrupted_h_fails) {
    auto spec = resolve_problem("ALLZERO", std::nullopt);
    CommandOptions o = with_n(2);
    o.construction = "lwpp";
    o.h_offset = 1;
    auto result = command_verify(spec, o);
    ASSERT_EQ(result.exit_code, 1);
    const auto &section = result.report["constructions"][0];
    ASSERT_EQ(section["failures"].size(), 4u);
    ASSERT_EQ(section["inputs"][0]["x"], "00");
    ASSERT_EQ(section["inputs"][0]["error"]["term"], "00000000");
    o.construction = "lpwpp";
    ASSERT_EQ(command_verify(spec, o).exit_code, 1);
}

TEST(commands, simulate_round_trips_outcome) {
    auto spec = resolve_problem("ALLZERO", std::nullopt);
    CommandOptions o;
    o.input = "00";
    o.construction = "fig3-zqp";
    o.dump_state = true;
    o.checkpoints = true;
    o.dump_circuit = true;
    auto result = command_simulate(spec, o);
    ASSERT_EQ(result.exit_code, 0);
    auto outcome = outcome_from_json(result.report);
    ASSERT_EQ(outcome.verdict, Verdict::Yes);
    ASSERT_EQ(outcome_to_json(outcome, true, true)["final_state"], result.report["final_state"]);
    ASSERT_EQ(result.report["circuit"]["name"], "fig3-zqp");
}

TEST(commands, usage_errors) {
    auto spec = resolve_problem("ALLZERO", std::nullopt);
    CommandOptions o;
    ASSERT_THROW(command_simulate(spec, o), UsageError);
    o.input = "00";
    o.construction = "nope";
    ASSERT_THROW(command_simulate(spec, o), UsageError);
    ASSERT_THROW(command_verify(spec, with_n(12)), UsageError);
    auto parity = resolve_problem("PARITY", std::nullopt);
    auto large = with_n(19);
    large.construction = "un";
    large.input = std::string(19, '1');
    ASSERT_THROW(command_verify(parity, large), UsageError);
    large.force_large = true;
    ASSERT_EQ(command_verify(parity, large).exit_code, 0);
    auto reject = load_problem_spec(data_path("reject3.json"));
    CommandOptions lw = with_n(2);
    lw.construction = "lwpp";
    ASSERT_THROW(command_verify(reject, lw), UsageError);
}

TEST(commands, duals_report) {
    auto spec = resolve_problem("RANDOM", 9);
    auto result = command_duals(spec, with_n(3));
    ASSERT_EQ(result.exit_code, 0);
    ASSERT_EQ(result.report["seed"], 9);
    auto lemma = load_problem_spec(data_path("allzero_dsl.json"));
    auto lr = command_duals(lemma, CommandOptions{});
    ASSERT_EQ(lr.exit_code, 0);
    ASSERT_EQ(lr.report["lengths"].size(), 3u);
    for (const auto &section : lr.report["lengths"]) {
        for (const auto &row : section["inputs"]) {
            ASSERT_TRUE(row["matches_h"].get<bool>());
        }
    }
    auto single = load_problem_spec(data_path("reject3.json"));
    ASSERT_EQ(command_duals(single, with_n(1)).exit_code, 1);
}

TEST(capi, load_and_run) {
    qqc_problem *problem = nullptr;
    ASSERT_EQ(qqc_problem_load("ALLZERO", 0, 0, &problem), QQC_OK);
    qqc_options options;
    qqc_options_init(&options);
    options.n = 2;
    char *json = nullptr;
    ASSERT_EQ(qqc_verify(problem, &options, &json), QQC_OK);
    ASSERT_NE(json, nullptr);
    ASSERT_TRUE(nlohmann::json::parse(json)["passed"].get<bool>());
    qqc_string_free(json);

    options.construction = "lwpp";
    options.h_offset = 1;
    ASSERT_EQ(qqc_verify(problem, &options, &json), QQC_MISMATCH);
    qqc_string_free(json);

    options.construction = "bogus";
    ASSERT_EQ(qqc_simulate(problem, &options, &json), QQC_USAGE_ERROR);
    ASSERT_EQ(json, nullptr);
    ASSERT_NE(std::string(qqc_last_error()), "");

    ASSERT_EQ(qqc_problem_json(problem, &json), QQC_OK);
    ASSERT_EQ(nlohmann::json::parse(json)["name"], "ALLZERO");
    qqc_string_free(json);
    qqc_problem_free(problem);

    qqc_problem *missing = nullptr;
    ASSERT_EQ(qqc_problem_load("NOPE", 0, 0, &missing), QQC_SPEC_ERROR);
    ASSERT_EQ(missing, nullptr);
    ASSERT_STREQ(qqc_version(), "0.1.0");
}
