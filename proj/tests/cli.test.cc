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

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"

namespace {

struct Run {
    int code;
    std::string out;
};

Run run_cli(const std::string &args) {
    std::string cmd = std::string(TREEBSM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE *p = popen(cmd.c_str(), "r");
    EXPECT_NE(p, nullptr);
    std::string out;
    char buf[4096];
    size_t k;
    while ((k = fread(buf, 1, sizeof buf, p)) > 0) {
        out.append(buf, k);
    }
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// Minimal CSV reader. Quoted fields are stripped of their quotes.
std::vector<std::vector<std::string>> parse_csv(const std::string &text) {
    std::vector<std::vector<std::string>> rows;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        std::vector<std::string> row;
        std::string cell;
        bool quoted = false;
        for (char c : line) {
            if (c == '"') {
                quoted = !quoted;
            } else if (c == ',' && !quoted) {
                row.push_back(cell);
                cell.clear();
            } else {
                cell += c;
            }
        }
        row.push_back(cell);
        rows.push_back(row);
    }
    return rows;
}

std::filesystem::path scratch_dir() {
    auto d = std::filesystem::temp_directory_path() / ("treebsm_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
}

}  // namespace

TEST(cli, sweep_static_row_count_and_loss_free_row) {
    auto r = run_cli("sweep --protocol static --b 15,15,2 --eta 0.7:1.0:61");
    ASSERT_EQ(r.code, 0);
    auto rows = parse_csv(r.out);
    ASSERT_EQ(rows.size(), 62u);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"eta", "eps", "pr_complete", "err_complete", "eta_squared",
                                                 "eps_bsm"}));
    EXPECT_EQ(std::stod(rows[61][0]), 1.0);
    EXPECT_NEAR(std::stod(rows[61][2]), 1 - std::ldexp(1.0, -15), 1e-15);
    EXPECT_NEAR(std::stod(rows[1][0]), 0.7, 1e-15);
    EXPECT_NEAR(std::stod(rows[2][0]), 0.705, 1e-15);
}

TEST(cli, sweep_dynamic_beats_eta_squared_above_085) {
    auto r = run_cli("sweep --protocol dynamic --b 15,15,2 --eta 0.5:1.0:51");
    ASSERT_EQ(r.code, 0);
    auto rows = parse_csv(r.out);
    ASSERT_EQ(rows.size(), 52u);
    int checked = 0;
    for (size_t i = 1; i < rows.size(); i++) {
        double eta = std::stod(rows[i][0]);
        EXPECT_DOUBLE_EQ(std::stod(rows[i][4]), eta * eta);
        if (eta == 1.0) {
            // eta^2 = 1 there, while no tree beats 1 - 2^-b0 even without loss
            EXPECT_EQ(std::stod(rows[i][2]), 1 - std::ldexp(1.0, -15));
            EXPECT_LT(std::stod(rows[i][2]), std::stod(rows[i][4]));
        } else if (eta >= 0.85 - 1e-12) {
            EXPECT_GT(std::stod(rows[i][2]), std::stod(rows[i][4])) << "eta " << eta;
            checked++;
        }
    }
    EXPECT_EQ(checked, 15);
}

TEST(cli, sweep_static_74_15_beats_two_photon_error) {
    auto r = run_cli("sweep --protocol static --b 74,15 --eps 1e-6:1e-3 --eta 0.95");
    ASSERT_EQ(r.code, 0);
    auto rows = parse_csv(r.out);
    // one point per decade
    ASSERT_EQ(rows.size(), 5u);
    bool seen = false;
    for (size_t i = 1; i < rows.size(); i++) {
        double eps = std::stod(rows[i][1]);
        EXPECT_NEAR(std::stod(rows[i][5]), 3 * eps * (1 - eps), 1e-18);
        if (std::abs(eps - 1e-5) < 1e-12) {
            seen = true;
            EXPECT_LT(std::stod(rows[i][3]), std::stod(rows[i][5]));
        }
    }
    EXPECT_TRUE(seen);
}

TEST(cli, sweep_eps_linear_scale) {
    auto r = run_cli("sweep --b 2 --eta 0.9 --eps 0:0.01:3");
    ASSERT_EQ(r.code, 0);
    auto rows = parse_csv(r.out);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[2][1], "0.005");
}

TEST(cli, sweep_writes_file_and_manifest) {
    auto dir = scratch_dir();
    auto out = (dir / "s.csv").string();
    auto r = run_cli("sweep --b 3,2 --eta 0.8:0.9:3 --output " + out);
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream f(out + ".manifest.json");
    ASSERT_TRUE(f.good());
    auto m = nlohmann::json::parse(f);
    EXPECT_EQ(m["subcommand"], "sweep");
    EXPECT_EQ(m["parameters"]["b"], "3,2");
    EXPECT_EQ(m["outputs"][0], out);
    std::ifstream csv(out);
    std::stringstream text;
    text << csv.rdbuf();
    EXPECT_EQ(parse_csv(text.str()).size(), 4u);
    std::filesystem::remove_all(dir);
}

TEST(cli, sweep_golden_small) {
    auto r = run_cli("sweep --protocol static --b 2 --eta 0.5:1:3");
    ASSERT_EQ(r.code, 0);
    // (2), eps=0: success needs both pairs fused and the chosen ones measured.
    // eta=1 gives 3/4; eta=0.5 by hand: 0.5*0.25*... checked numerically below
    auto rows = parse_csv(r.out);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[3][2], "0.75");
    EXPECT_EQ(rows[2][0], "0.75");
}

TEST(cli, usage_errors_exit_1) {
    EXPECT_EQ(run_cli("sweep --b 2,x").code, 1);
    EXPECT_EQ(run_cli("sweep --b 2 --eta 1.5").code, 1);
    EXPECT_EQ(run_cli("sweep --b 2 --eta 0.1:0.2:0").code, 1);
    EXPECT_EQ(run_cli("sweep --b 2 --output /nonexistent/dir/x.csv").code, 1);
    EXPECT_EQ(run_cli("nope").code, 1);
    EXPECT_EQ(run_cli("validate --b 2 -N 10").code, 1);
    EXPECT_EQ(run_cli("validate --b 2 --eps 0.01 --protocol loss-only -N 2000 --seed 1").code, 1);
}

TEST(cli, threshold_unreachable_target_exit_2) {
    auto r = run_cli("threshold --protocol static --max-depth 2 --max-branch 4 --target 1.0");
    EXPECT_EQ(r.code, 2);
}

TEST(cli, threshold_small_family_reports_bracket) {
    auto dir = scratch_dir();
    auto out = (dir / "t.json").string();
    auto r = run_cli("threshold --protocol static --max-depth 2 --max-branch 6 --target 0.9 --output " + out);
    ASSERT_EQ(r.code, 0);
    std::ifstream f(out);
    auto j = nlohmann::json::parse(f);
    double lo = j["bracket"][0], hi = j["bracket"][1], eta = j["eta_star"];
    EXPECT_LE(lo, eta);
    EXPECT_LE(eta, hi);
    EXPECT_LE(hi - lo, 1e-3);
    EXPECT_EQ(j["family"]["max_depth"], 2);
    EXPECT_EQ(j["family"]["max_branch"], 6);
    std::filesystem::remove_all(dir);
}

TEST(cli, validate_static_single_level_passes) {
    auto r = run_cli("validate --protocol static --b 2 --eta 0.9 -N 1000000 --seed 7");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("0.492075"), std::string::npos) << r.out;
}

TEST(cli, validate_dynamic_15_15_2_passes) {
    auto r = run_cli("validate --protocol dynamic --b 15,15,2 --eta 0.95 --eps 1e-5 -N 100000 --seed 11");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST(cli, validate_mismatched_protocols_fail) {
    auto r = run_cli("validate --protocol static --mc-protocol dynamic --b 15,15,2 --eta 0.6 -N 100000 --seed 5");
    EXPECT_EQ(r.code, 3) << r.out;
    EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(cli, validate_record_is_reproducible) {
    auto dir = scratch_dir();
    auto a = (dir / "a.json").string(), b = (dir / "b.json").string();
    std::string args = "validate --protocol dynamic --b 3,2 --eta 0.85 --eps 0.001 -N 20000 --seed 99 --workers 3";
    ASSERT_EQ(run_cli(args + " --output " + a).code, 0);
    ASSERT_EQ(run_cli(args + " --output " + b).code, 0);
    std::ifstream fa(a), fb(b), ma(a + ".manifest.json");
    auto ja = nlohmann::json::parse(fa), jb = nlohmann::json::parse(fb), m = nlohmann::json::parse(ma);
    EXPECT_EQ(ja["counters"], jb["counters"]);
    EXPECT_EQ(m["seed"], 99);
    EXPECT_EQ(m["workers"], 3);
    EXPECT_EQ(m["seed_generated"], false);
    std::filesystem::remove_all(dir);
}

TEST(cli, validate_records_generated_seed) {
    auto dir = scratch_dir();
    auto a = (dir / "a.json").string();
    ASSERT_EQ(run_cli("validate --b 2 --eta 0.9 -N 2000 --output " + a).code, 0);
    std::ifstream ma(a + ".manifest.json");
    auto m = nlohmann::json::parse(ma);
    EXPECT_EQ(m["seed_generated"], true);
    EXPECT_TRUE(m["seed"].is_number_unsigned());
    std::filesystem::remove_all(dir);
}

TEST(cli, verify_generation_2_2) {
    auto r = run_cli("verify-generation --b 2,2");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("PASS", 0), 0u) << r.out;
    EXPECT_NE(r.out.find("27 instructions"), std::string::npos);
    EXPECT_NE(r.out.find("3 matter registers"), std::string::npos);
}

TEST(cli, verify_generation_round_trip_and_tamper) {
    auto dir = scratch_dir();
    auto seq = (dir / "seq.txt").string();
    ASSERT_EQ(run_cli("verify-generation --b 2,2 --emit " + seq).code, 0);
    ASSERT_EQ(run_cli("verify-generation --b 2,2 --sequence " + seq).code, 0);
    // drop the final instruction
    std::ifstream f(seq);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(f, line)) {
        lines.push_back(line);
    }
    f.close();
    lines.pop_back();
    std::ofstream g(seq);
    for (auto &l : lines) {
        g << l << "\n";
    }
    g.close();
    auto r = run_cli("verify-generation --b 2,2 --sequence " + seq);
    EXPECT_EQ(r.code, 3) << r.out;
    EXPECT_EQ(run_cli("verify-generation --b 2,2 --sequence " + (dir / "missing").string()).code, 1);
    std::filesystem::remove_all(dir);
}

TEST(cli, search_dynamic_front_has_15_15_2) {
    auto r = run_cli("search --protocol dynamic --eta 0.95 --eps 1e-5");
    ASSERT_EQ(r.code, 0);
    auto rows = parse_csv(r.out);
    bool found = false;
    for (auto &row : rows) {
        if (row[0] == "15,15,2") {
            found = true;
            EXPECT_EQ(row[8], "true");
            EXPECT_EQ(row[1], "691");
        }
    }
    EXPECT_TRUE(found);
}

TEST(cli, search_small_static_has_no_error_correcting_tree) {
    auto r = run_cli("search --protocol static --eta 0.95 --eps 1e-5 --max-n 100 --all");
    ASSERT_EQ(r.code, 0);
    auto rows = parse_csv(r.out);
    ASSERT_GT(rows.size(), 10u);
    for (size_t i = 1; i < rows.size(); i++) {
        EXPECT_EQ(rows[i][8], "false") << rows[i][0];
        EXPECT_LE(std::stoi(rows[i][1]), 100);
    }
}
