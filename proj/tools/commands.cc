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

#include "commands.h"

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "treebsm/analytic/dynamic_protocol.h"
#include "treebsm/analytic/threshold.h"
#include "treebsm/core/errors.h"
#include "treebsm/genseq/verify.h"
#include "treebsm/montecarlo/record.h"
#include "treebsm/search/search.h"

#ifndef TREEBSM_VERSION
#define TREEBSM_VERSION "dev"
#endif

namespace treebsm::cli {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

double parse_number(const std::string &s, const std::string &what) {
    std::size_t used = 0;
    double v;
    try {
        v = std::stod(s, &used);
    } catch (...) {
        throw UsageError(what + ": '" + s + "' is not a number");
    }
    if (used != s.size()) {
        throw UsageError(what + ": '" + s + "' is not a number");
    }
    return v;
}

void check_unit(double x, const std::string &what) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw UsageError(what + " must lie in [0,1], got " + format_double(x));
    }
}

std::ofstream open_output(const std::string &path) {
    std::ofstream f(path);
    if (!f) {
        throw UsageError("cannot write '" + path + "'");
    }
    return f;
}

// Writes `<output>.manifest.json` next to a data file.
void write_manifest(const std::string &output, const std::string &subcommand, const json &echo, double seconds,
                    const json &extra = json::object()) {
    json m = {
        {"subcommand", subcommand},
        {"parameters", echo},
        {"version", TREEBSM_VERSION},
        {"outputs", json::array({output})},
        {"wall_seconds", seconds},
    };
    for (auto it = extra.begin(); it != extra.end(); ++it) {
        m[it.key()] = it.value();
    }
    auto f = open_output(output + ".manifest.json");
    f << m.dump(2) << "\n";
}

Protocol analytic_protocol(const std::string &s) {
    Protocol p = parse_protocol(s);
    if (p == Protocol::LossOnly) {
        throw UnsupportedConfiguration("the loss-only protocol has no analytic model");
    }
    return p;
}

// Writes text to `output`, or to stdout when no path is given.
void emit_text(const std::string &output, const std::string &text) {
    if (output.empty()) {
        std::cout << text;
    } else {
        auto f = open_output(output);
        f << text;
        if (!f) {
            throw UsageError("write to '" + output + "' failed");
        }
    }
}

}  // namespace

std::string format_double(double x) {
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, r.ptr);
}

std::vector<double> Range::values() const {
    std::vector<double> out;
    if (count == 1) {
        out.push_back(start);
        return out;
    }
    for (int i = 0; i < count; i++) {
        if (i == count - 1) {
            out.push_back(stop);
        } else if (log) {
            double a = std::log10(start), b = std::log10(stop);
            out.push_back(std::pow(10.0, a + (b - a) * i / (count - 1)));
        } else {
            out.push_back(start + (stop - start) * i / (count - 1));
        }
    }
    return out;
}

Range parse_range(const std::string &text, const std::string &what, int default_count, Scale scale) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ':')) {
        parts.push_back(part);
    }
    if (parts.empty() || parts.size() > 3) {
        throw UsageError(what + ": expected start[:stop[:count]], got '" + text + "'");
    }
    Range r;
    r.start = parse_number(parts[0], what);
    r.stop = parts.size() > 1 ? parse_number(parts[1], what) : r.start;
    r.log = scale == Scale::Log || (scale == Scale::Auto && r.start > 0 && r.stop / r.start >= 10);
    if (r.log && !(r.start > 0 && r.stop > 0)) {
        throw UsageError(what + ": a log-scale range needs positive ends");
    }
    if (parts.size() == 3) {
        double c = parse_number(parts[2], what);
        if (c < 1 || c != std::floor(c) || c > 1e6) {
            throw UsageError(what + ": count must be a positive integer, got '" + parts[2] + "'");
        }
        r.count = (int)c;
    } else if (parts.size() == 2 && r.start != r.stop) {
        r.count = r.log ? (int)std::lround(std::abs(std::log10(r.stop / r.start))) + 1 : default_count;
        r.count = std::max(r.count, 2);
    }
    if (r.count > 1 && r.start == r.stop) {
        r.count = 1;
    }
    return r;
}

// ---- sweep ----------------------------------------------------------------

int cmd_sweep(const SweepArgs &a, const json &echo) {
    auto t0 = Clock::now();
    Protocol protocol = analytic_protocol(a.protocol);
    BranchingVector b = BranchingVector::parse(a.b);
    Scale scale = a.eps_scale == "log" ? Scale::Log : a.eps_scale == "linear" ? Scale::Linear : Scale::Auto;
    if (a.eps_scale != "log" && a.eps_scale != "linear" && a.eps_scale != "auto") {
        throw UsageError("--eps-scale must be auto, log or linear");
    }
    auto etas = parse_range(a.eta, "--eta", 51, Scale::Linear).values();
    auto epss = parse_range(a.eps, "--eps", 11, scale).values();
    std::ostringstream os;
    os << "eta,eps,pr_complete,err_complete,eta_squared,eps_bsm\n";
    for (double eta : etas) {
        check_unit(eta, "eta");
        for (double eps : epss) {
            check_unit(eps, "eps");
            auto params = ChannelParams::make(eta, eps);
            auto r = logical_bsm(protocol, b, params);
            os << format_double(eta) << ',' << format_double(eps) << ',' << format_double(r.pr_complete) << ','
               << format_double(r.err_complete) << ',' << format_double(eta * eta) << ','
               << format_double(params.eps_bsm()) << '\n';
        }
    }
    emit_text(a.output, os.str());
    if (!a.output.empty()) {
        write_manifest(a.output, "sweep", echo, seconds_since(t0));
    }
    return kOk;
}

// ---- threshold --------------------------------------------------------------

int cmd_threshold(const ThresholdArgs &a, const json &echo) {
    auto t0 = Clock::now();
    Protocol protocol = analytic_protocol(a.protocol);
    TreeFamily family = default_threshold_family();
    if (a.max_depth > 0) {
        family.max_depth = a.max_depth;
    }
    if (a.max_branch > 0) {
        family.max_branch = a.max_branch;
    }
    ThresholdResult r = find_threshold(protocol, family, a.target, a.tol);
    json rep = {
        {"protocol", protocol_name(protocol)},
        {"family", {{"max_depth", family.max_depth}, {"max_branch", family.max_branch}}},
        {"target", a.target},
        {"tol", a.tol},
        {"eta_star", r.eta_star},
        {"bracket", {r.lo, r.hi}},
        {"iterations", r.iterations},
        {"witness", {{"b", r.witness.tree.str()}, {"pr_complete", r.witness.pr_complete}}},
    };
    std::cout << "protocol " << protocol_name(protocol) << ", trees with depth <= " << family.max_depth
              << " and b_k <= " << family.max_branch << ", target " << format_double(a.target) << "\n"
              << "eta* = " << r.eta_star << "  bracket [" << r.lo << ", " << r.hi << "]\n"
              << "witness (" << r.witness.tree.str() << ") pr_complete = " << r.witness.pr_complete << "\n";
    if (!a.output.empty()) {
        emit_text(a.output, rep.dump(2) + "\n");
        write_manifest(a.output, "threshold", echo, seconds_since(t0));
    }
    return kOk;
}

// ---- validate ---------------------------------------------------------------

int cmd_validate(const ValidateArgs &a, const json &echo) {
    auto t0 = Clock::now();
    if (a.samples < 1000) {
        throw UsageError("--samples must be at least 1000");
    }
    check_unit(a.eta, "eta");
    check_unit(a.eps, "eps");
    Protocol analytic = parse_protocol(a.protocol);
    Protocol sampled = a.mc_protocol.empty() ? analytic : parse_protocol(a.mc_protocol);

    SampleConfig cfg;
    cfg.tree = BranchingVector::parse(a.b);
    cfg.params = ChannelParams::make(a.eta, a.eps);
    cfg.protocol = sampled;
    cfg.samples = a.samples;
    bool auto_seed = !a.seed.has_value();
    cfg.seed = auto_seed ? ((std::uint64_t)std::random_device{}() << 32 | std::random_device{}()) : *a.seed;
    cfg.workers = a.workers > 0 ? a.workers : default_workers();
    cfg.faults = parse_fault_model(a.faults);

    double an_pr, an_err = 0;
    bool have_err = false;
    if (analytic == Protocol::LossOnly) {
        // no closed form; exhaustive enumeration stands in for small trees
        an_pr = enumerate_success(Protocol::LossOnly, cfg.tree, cfg.params);
    } else {
        auto r = logical_bsm(analytic, cfg.tree, cfg.params);
        an_pr = r.pr_complete;
        an_err = r.err_complete;
        have_err = a.eps > 0;
    }
    McEstimate mc = run_monte_carlo(cfg);

    auto z_of = [](double observed, double expected, double n, double fallback_sd) {
        double sd = std::sqrt(expected * (1 - expected) / n);
        if (sd == 0) {
            sd = fallback_sd;
        }
        if (sd == 0) {
            return observed == expected ? 0.0 : INFINITY;
        }
        return (observed - expected) / sd;
    };
    double z_pr = z_of(mc.pr_complete, an_pr, (double)cfg.samples, mc.pr_stderr);
    bool ok = std::abs(z_pr) <= 3;
    std::cout << "success: analytic " << an_pr << "  monte-carlo " << mc.pr_complete << " +- " << mc.pr_stderr
              << "  z = " << z_pr << "\n";
    json zs = {{"pr_complete", z_pr}};
    if (have_err && mc.counts.successes > 1000) {
        double z_err = z_of(mc.err_complete, an_err, (double)mc.counts.successes, mc.err_stderr);
        ok = ok && std::abs(z_err) <= 3;
        zs["err_complete"] = z_err;
        std::cout << "error:   analytic " << an_err << "  monte-carlo " << mc.err_complete << " +- " << mc.err_stderr
                  << "  z = " << z_err << "\n";
    } else if (have_err) {
        std::cout << "error:   skipped (" << mc.counts.successes << " successes, need > 1000)\n";
    }
    std::cout << (ok ? "PASS" : "FAIL") << " (seed " << cfg.seed << ", " << cfg.workers << " workers, "
              << cfg.samples << " samples)\n";
    if (!a.output.empty()) {
        json rec = mc_record(cfg, mc);
        rec["analytic"] = {{"protocol", protocol_name(analytic)}, {"pr_complete", an_pr}, {"err_complete", an_err}};
        rec["z"] = zs;
        rec["pass"] = ok;
        emit_text(a.output, rec.dump(2) + "\n");
        write_manifest(a.output, "validate", echo, seconds_since(t0),
                       {{"seed", cfg.seed}, {"seed_generated", auto_seed}, {"workers", cfg.workers}});
    } else if (auto_seed) {
        std::cerr << "note: no --seed given; generated seed " << cfg.seed << "\n";
    }
    return ok ? kOk : kMismatch;
}

// ---- verify-generation ------------------------------------------------------

int cmd_verify_generation(const VerifyArgs &a, const json &echo) {
    auto t0 = Clock::now();
    BranchingVector b = BranchingVector::parse(a.b);
    InstructionSequence seq;
    if (!a.sequence.empty()) {
        std::ifstream f(a.sequence);
        if (!f) {
            throw UsageError("cannot read '" + a.sequence + "'");
        }
        std::stringstream text;
        text << f.rdbuf();
        seq = InstructionSequence::parse(text.str());
    } else {
        seq = compile_bell_pair(b);
    }
    if (!a.emit.empty()) {
        emit_text(a.emit, seq.str());
    }
    VerifyReport rep = verify_bell_pair(seq, b);
    std::cout << (rep.ok ? "PASS" : "FAIL") << " (" << b.str() << "): " << seq.ops.size() << " instructions, "
              << seq.num_registers << " matter registers, " << seq.num_photons << " photons, " << rep.patterns
              << " outcome patterns" << (rep.exhaustive ? " (all)" : "") << "\n";
    if (!rep.ok) {
        std::cout << rep.diagnostic << "\n";
    }
    if (!a.output.empty()) {
        json j = {
            {"b", b.str()},
            {"pass", rep.ok},
            {"instructions", seq.ops.size()},
            {"registers", seq.num_registers},
            {"photons", seq.num_photons},
            {"measurements", rep.measurements},
            {"patterns", rep.patterns},
            {"exhaustive", rep.exhaustive},
            {"diagnostic", rep.diagnostic},
        };
        emit_text(a.output, j.dump(2) + "\n");
        write_manifest(a.output, "verify-generation", echo, seconds_since(t0));
    }
    return rep.ok ? kOk : kMismatch;
}

// ---- search -----------------------------------------------------------------

int cmd_search(const SearchArgs &a, const json &echo) {
    auto t0 = Clock::now();
    Protocol protocol = analytic_protocol(a.protocol);
    check_unit(a.eta, "eta");
    check_unit(a.eps, "eps");
    SearchBounds bounds;
    bounds.max_depth = a.max_depth;
    bounds.max_branch = a.max_branch;
    bounds.max_photons = a.max_n;
    bounds.min_branch = a.min_branch;
    bounds.non_increasing = !a.any_order;
    int workers = a.workers > 0 ? a.workers : default_workers();
    auto params = ChannelParams::make(a.eta, a.eps);
    std::vector<ParetoEntry> rows =
        a.all ? evaluate_family(bounds, params, protocol, workers) : pareto_front(bounds, params, protocol, workers);
    std::ostringstream os;
    write_front_csv(os, rows);
    emit_text(a.output, os.str());
    if (!a.output.empty()) {
        write_manifest(a.output, "search", echo, seconds_since(t0), {{"workers", workers}});
    }
    return kOk;
}

}  // namespace treebsm::cli
