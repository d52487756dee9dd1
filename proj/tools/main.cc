// Copyright 2026 The treebsm Authors
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

#include <iostream>

#include "CLI11.hpp"
#include "commands.h"
#include "treebsm/core/errors.h"

using namespace treebsm;
using namespace treebsm::cli;

int main(int argc, char **argv) {
    CLI::App app{"Tree-encoded logical Bell-state measurements: analytic model, sampler, search"};
    app.require_subcommand(1);
    nlohmann::json echo;

    SweepArgs sw;
    auto *sweep = app.add_subcommand("sweep", "pr_complete and err_complete over an eta x eps grid (CSV)");
    sweep->add_option("--protocol", sw.protocol, "static | dynamic")->capture_default_str();
    sweep->add_option("--b", sw.b, "branching vector, e.g. 15,15,2")->required();
    sweep->add_option("--eta", sw.eta, "start[:stop[:count]]")->capture_default_str();
    sweep->add_option("--eps", sw.eps, "start[:stop[:count]]")->capture_default_str();
    sweep->add_option("--eps-scale", sw.eps_scale, "auto | log | linear")->capture_default_str();
    sweep->add_option("-o,--output", sw.output, "CSV path (stdout when omitted)");

    ThresholdArgs th;
    auto *threshold = app.add_subcommand("threshold", "smallest eta at which some tree reaches the target");
    threshold->add_option("--protocol", th.protocol, "static | dynamic")->capture_default_str();
    threshold->add_option("--max-depth", th.max_depth, "family depth bound (default 5)");
    threshold->add_option("--max-branch", th.max_branch, "family branching bound (default 60)");
    threshold->add_option("--target", th.target, "success target")->capture_default_str();
    threshold->add_option("--tol", th.tol, "bisection tolerance on eta")->capture_default_str();
    threshold->add_option("-o,--output", th.output, "JSON report path");

    ValidateArgs va;
    std::uint64_t seed = 0;
    auto *validate = app.add_subcommand("validate", "compare the analytic model with the Monte-Carlo sampler");
    validate->add_option("--protocol", va.protocol, "static | dynamic | loss-only")->capture_default_str();
    validate->add_option("--mc-protocol", va.mc_protocol, "protocol for the sampler (default: --protocol)");
    validate->add_option("--b", va.b, "branching vector")->required();
    validate->add_option("--eta", va.eta)->capture_default_str();
    validate->add_option("--eps", va.eps)->capture_default_str();
    validate->add_option("-N,--samples", va.samples)->capture_default_str();
    auto *seed_opt = validate->add_option("--seed", seed, "RNG seed (generated and recorded when omitted)");
    validate->add_option("--workers", va.workers, "threads (default: TREEBSM_WORKERS or all cores)");
    validate->add_option("--faults", va.faults, "marginal | pauli")->capture_default_str();
    validate->add_option("-o,--output", va.output, "JSON record path");

    VerifyArgs ve;
    auto *verify = app.add_subcommand("verify-generation", "compile and check the matter-qubit sequence");
    verify->add_option("--b", ve.b, "branching vector")->required();
    verify->add_option("--sequence", ve.sequence, "verify this instruction file instead of compiling");
    verify->add_option("--emit", ve.emit, "write the instruction sequence here");
    verify->add_option("-o,--output", ve.output, "JSON report path");

    SearchArgs se;
    auto *search = app.add_subcommand("search", "Pareto front of trees (CSV)");
    search->add_option("--protocol", se.protocol, "static | dynamic")->capture_default_str();
    search->add_option("--eta", se.eta)->capture_default_str();
    search->add_option("--eps", se.eps)->capture_default_str();
    search->add_option("--max-depth", se.max_depth)->capture_default_str();
    search->add_option("--max-branch", se.max_branch)->capture_default_str();
    search->add_option("--max-n", se.max_n, "largest photon count")->capture_default_str();
    search->add_option("--min-branch", se.min_branch)->capture_default_str();
    search->add_flag("--any-order", se.any_order, "allow b_k > b_{k-1}");
    search->add_flag("--all", se.all, "print every tree, not just the front");
    search->add_option("--workers", se.workers, "threads (default: TREEBSM_WORKERS or all cores)");
    search->add_option("-o,--output", se.output, "CSV path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    // parameter echo for the manifest
    for (auto *sub : app.get_subcommands()) {
        for (const auto *opt : sub->get_options()) {
            if (opt->get_name() == "--help" || opt->get_name() == "-h") {
                continue;
            }
            auto res = opt->results();
            std::string key = opt->get_name(false, true);
            while (!key.empty() && key[0] == '-') {
                key.erase(0, 1);
            }
            if (opt->get_expected_min() == 0) {
                echo[key] = opt->count() > 0;
            } else if (!res.empty()) {
                echo[key] = res.back();
            } else if (!opt->get_default_str().empty()) {
                echo[key] = opt->get_default_str();
            }
        }
    }

    try {
        if (*sweep) {
            return cmd_sweep(sw, echo);
        }
        if (*threshold) {
            return cmd_threshold(th, echo);
        }
        if (*validate) {
            if (*seed_opt) {
                va.seed = seed;
            }
            return cmd_validate(va, echo);
        }
        if (*verify) {
            return cmd_verify_generation(ve, echo);
        }
        if (*search) {
            return cmd_search(se, echo);
        }
    } catch (const UnreachableTarget &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInfeasible;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
