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

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qqc/qqc.h"

namespace {

int exit_code_for(qqc_status status) {
    switch (status) {
        case QQC_OK:
            return 0;
        case QQC_MISMATCH:
            return 1;
        default:
            return 2;
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact simulation of gap-amplitude quasi-quantum circuits"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(qqc_version()));

    std::string problem;
    int n = -1;
    std::string input;
    std::string construction;
    bool dump_state = false;
    bool checkpoints = false;
    bool dump_circuit = false;
    bool force_large = false;
    bool json = false;
    std::uint64_t seed = 0;
    std::int64_t h_offset = 0;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--problem", problem, "Problem spec file or builtin name")->required();
        sub->add_option("--n", n, "Input length");
        sub->add_option("--input", input, "Input bit string");
        sub->add_option("--seed", seed, "Seed for randomly generated problems");
        sub->add_flag("--force-large", force_large, "Allow n + m above the desk-scale limit");
        sub->add_flag("--json", json, "Emit compact single-line JSON");
    };

    auto *gap = app.add_subcommand("gap", "Gap statistics of the verifiers");
    add_common(gap);
    auto *simulate = app.add_subcommand("simulate", "Run one construction on one input");
    add_common(simulate);
    auto *verify = app.add_subcommand("verify", "Sweep all inputs of length n and check every identity");
    add_common(verify);
    auto *duals = app.add_subcommand("duals", "Apply the lemma transforms and validate the dual pair");
    add_common(duals);

    const std::vector<std::string> constructions{"un", "fig3-zqp", "fig3-post", "wn", "lwpp", "lpwpp"};
    for (auto *sub : {simulate, verify}) {
        std::vector<std::string> allowed = constructions;
        if (sub == verify) {
            allowed.push_back("all");
        }
        sub->add_option("--construction", construction, "Construction to run")
            ->check(CLI::IsMember(allowed));
        sub->add_option("--h-offset", h_offset, "Add this to h(n) before the deciders run");
    }
    simulate->add_flag("--dump-state", dump_state, "Include the final state");
    simulate->add_flag("--checkpoints", checkpoints, "Include checkpoint states");
    simulate->add_flag("--dump-circuit", dump_circuit, "Include the circuit");
    verify->add_flag("--checkpoints", checkpoints, "Also check the intermediate states");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    bool has_seed = false;
    for (auto *sub : {gap, simulate, verify, duals}) {
        if (sub->parsed() && sub->count("--seed") > 0) {
            has_seed = true;
        }
    }

    qqc_problem *handle = nullptr;
    qqc_status status = qqc_problem_load(problem.c_str(), seed, has_seed ? 1 : 0, &handle);
    if (status != QQC_OK) {
        std::cerr << "error: " << qqc_last_error() << "\n";
        return exit_code_for(status);
    }

    qqc_options options;
    qqc_options_init(&options);
    options.n = n;
    options.input = input.empty() ? nullptr : input.c_str();
    options.construction = construction.empty() ? nullptr : construction.c_str();
    options.dump_state = dump_state;
    options.checkpoints = checkpoints;
    options.dump_circuit = dump_circuit;
    options.force_large = force_large;
    options.h_offset = h_offset;

    char *report = nullptr;
    if (gap->parsed()) {
        status = qqc_gap(handle, &options, &report);
    } else if (simulate->parsed()) {
        status = qqc_simulate(handle, &options, &report);
    } else if (verify->parsed()) {
        status = qqc_verify(handle, &options, &report);
    } else {
        status = qqc_duals(handle, &options, &report);
    }
    qqc_problem_free(handle);

    bool have_report = report != nullptr;
    if (have_report) {
        std::string text = report;
        qqc_string_free(report);
        if (json) {
            auto j = nlohmann::json::parse(text);
            text = j.dump();
        }
        std::cout << text << "\n";
    }
    if (status == QQC_MISMATCH) {
        std::cerr << "verification mismatch" << (have_report ? "" : std::string(": ") + qqc_last_error())
                  << "\n";
    } else if (status != QQC_OK) {
        std::cerr << "error: " << qqc_last_error() << "\n";
    }
    return exit_code_for(status);
}
