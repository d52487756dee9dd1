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

#ifndef TREEBSM_TOOLS_COMMANDS_H
#define TREEBSM_TOOLS_COMMANDS_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace treebsm::cli {

enum ExitCode { kOk = 0, kUsage = 1, kInfeasible = 2, kMismatch = 3 };

/// "a", "a:b" or "a:b:count". Without a count, `default_count` points are
/// used (log scale: one per decade).
struct Range {
    double start = 0, stop = 0;
    int count = 1;
    bool log = false;
    std::vector<double> values() const;
};
enum class Scale { Auto, Linear, Log };
Range parse_range(const std::string &text, const std::string &what, int default_count, Scale scale);

/// Shortest text that reads back as the same double.
std::string format_double(double x);

struct SweepArgs {
    std::string protocol = "static";
    std::string b;
    std::string eta = "0.5:1:51";
    std::string eps = "0";
    std::string eps_scale = "auto";
    std::string output;
};

struct ThresholdArgs {
    std::string protocol = "static";
    int max_depth = 0;   // 0: default family
    int max_branch = 0;
    double target = 0.99;
    double tol = 1e-3;
    std::string output;
};

struct ValidateArgs {
    std::string protocol = "static";
    std::string mc_protocol;  // empty: same as protocol
    std::string b;
    double eta = 0.9;
    double eps = 0;
    std::int64_t samples = 100000;
    std::optional<std::uint64_t> seed;
    int workers = 0;  // 0: default
    std::string faults = "marginal";
    std::string output;
};

struct VerifyArgs {
    std::string b;
    std::string sequence;  // read this file instead of compiling
    std::string emit;      // write the compiled sequence here
    std::string output;
};

struct SearchArgs {
    std::string protocol = "dynamic";
    double eta = 0.95;
    double eps = 1e-5;
    int max_depth = 4;
    int max_branch = 80;
    std::int64_t max_n = 2000;
    int min_branch = 2;
    bool any_order = false;
    bool all = false;
    int workers = 0;
    std::string output;
};

/// Each returns the process exit code. `echo` is the parameter set recorded
/// in the manifest.
int cmd_sweep(const SweepArgs &a, const nlohmann::json &echo);
int cmd_threshold(const ThresholdArgs &a, const nlohmann::json &echo);
int cmd_validate(const ValidateArgs &a, const nlohmann::json &echo);
int cmd_verify_generation(const VerifyArgs &a, const nlohmann::json &echo);
int cmd_search(const SearchArgs &a, const nlohmann::json &echo);

}  // namespace treebsm::cli

#endif
