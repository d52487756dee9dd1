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

#include "treebsm/montecarlo/sampler.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "treebsm/core/errors.h"
#include "treebsm/core/tree.h"
#include "treebsm/montecarlo/evaluate.h"
#include "treebsm/montecarlo/rng.h"
#include "treebsm/simd/bits.h"

namespace treebsm {

namespace {

// substream labels
constexpr std::uint32_t kLossLabel = 1;
constexpr std::uint32_t kCoinLabel = 2;
constexpr std::uint32_t kFaultLabel = 3;
constexpr std::uint32_t kVoteLabel = 4;
constexpr std::uint32_t kMarginalLabel = 5;

struct Scratch {
    std::vector<std::uint64_t> r;
    std::vector<std::uint64_t> mask;
    std::vector<Pauli> kinds;
};

// flags[i] = Bernoulli(p) for i < n, drawn from rng.
void bernoulli_flags(CounterRng &rng, double p, std::size_t n, Scratch &s, std::uint8_t *const *flags,
                     int num_outputs) {
    // n draws per output array, interleaved
    std::size_t total = n * num_outputs;
    if (p <= 0) {
        for (int k = 0; k < num_outputs; k++) {
            std::fill(flags[k], flags[k] + n, 0);
        }
        return;
    }
    if (p >= 1) {
        for (int k = 0; k < num_outputs; k++) {
            std::fill(flags[k], flags[k] + n, 1);
        }
        return;
    }
    s.r.resize(total);
    s.mask.resize((total + 63) / 64);
    rng.fill(s.r.data(), total);
    simd::kernels().threshold_mask(s.r.data(), total, simd::probability_threshold(p), s.mask.data());
    for (std::size_t i = 0; i < total; i++) {
        flags[i % num_outputs][i / num_outputs] = (s.mask[i >> 6] >> (i & 63)) & 1;
    }
}

void fill_world(const SampleConfig &cfg, std::uint64_t index, World &w, Scratch &s) {
    CounterRng base(cfg.seed, index);
    std::size_t n = w.n;
    const ChannelParams &p = cfg.params;

    CounterRng loss = base.split(kLossLabel);
    std::uint8_t *lost[2] = {w.lost[0].data(), w.lost[1].data()};
    bernoulli_flags(loss, 1.0 - p.eta, n, s, lost, 2);

    CounterRng coins = base.split(kCoinLabel);
    std::size_t words = (n + 63) / 64;
    s.mask.resize(words);
    coins.fill(s.mask.data(), words);
    for (std::size_t i = 0; i < n; i++) {
        w.coin[i] = (s.mask[i >> 6] >> (i & 63)) & 1;
    }

    if (p.eps <= 0) {
        w.clear_errors();
        return;
    }

    if (cfg.faults == FaultModel::Marginal) {
        CounterRng m = base.split(kMarginalLabel);
        std::uint8_t *zz[1] = {w.zz_err.data()};
        std::uint8_t *xx[1] = {w.xx_err.data()};
        bernoulli_flags(m, p.err_dzz(), n, s, zz, 1);
        bernoulli_flags(m, p.err_dxx(), n, s, xx, 1);
        // single-photon readouts flip at rate eps, independently
        std::uint8_t *single[4] = {w.z_err[0].data(), w.z_err[1].data(), w.x_err[0].data(), w.x_err[1].data()};
        bernoulli_flags(m, p.eps, n, s, single, 4);
        return;
    }

    // per-photon faults: the fault kind comes from where the draw lands
    // inside [0, threshold)
    CounterRng faults = base.split(kFaultLabel);
    double pd = std::min(1.0, p.eps_d());
    std::uint64_t thr = simd::probability_threshold(pd);
    s.r.resize(2 * n);
    s.kinds.resize(2 * n);
    faults.fill(s.r.data(), 2 * n);
    for (std::size_t i = 0; i < 2 * n; i++) {
        std::uint64_t r = s.r[i];
        if (pd >= 1) {
            s.kinds[i] = (Pauli)(1 + r % 3);
        } else if (r < thr) {
            s.kinds[i] = (Pauli)(1 + (unsigned)(((unsigned __int128)r * 3) / thr));
        } else {
            s.kinds[i] = Pauli::I;
        }
    }
    for (std::size_t v = 0; v < n; v++) {
        Pauli a = s.kinds[2 * v], b = s.kinds[2 * v + 1];
        w.z_err[0][v] = flips_z(a);
        w.x_err[0][v] = flips_x(a);
        w.z_err[1][v] = flips_z(b);
        w.x_err[1][v] = flips_x(b);
        BsmFlips f = bsm_flips(a, b);
        w.zz_err[v] = f.zz;
        w.xx_err[v] = f.xx_wrong;
    }
}

void check_config(const SampleConfig &cfg) {
    if (cfg.samples < 1) {
        throw UsageError("samples must be >= 1");
    }
    if (cfg.workers < 1) {
        throw UsageError("workers must be >= 1");
    }
    if (cfg.protocol == Protocol::LossOnly && cfg.params.eps != 0) {
        throw UnsupportedConfiguration("the loss-only protocol fails to enable error correction; run it with eps = 0");
    }
}

McCounters run_range(const TreeGraph &tree, const SampleConfig &cfg, std::int64_t begin, std::int64_t end) {
    McCounters c;
    World w;
    w.resize(tree.size());
    Scratch s;
    ProtocolEvaluator ev(tree);
    for (std::int64_t i = begin; i < end; i++) {
        fill_world(cfg, (std::uint64_t)i, w, s);
        CounterRng votes = CounterRng(cfg.seed, (std::uint64_t)i).split(kVoteLabel);
        LogicalOutcome o = ev.run(cfg.protocol, w, votes);
        auto bc = ev.basis_counts();
        c.samples++;
        c.bsm_photons += bc.bsm;
        c.x_photons += bc.x;
        c.z_photons += bc.z;
        if (o.success) {
            c.successes++;
            c.errors += o.error;
            c.zz_errors += o.zz_error;
            c.xx_errors += o.xx_error;
        }
    }
    return c;
}

McEstimate run_protocol(const SampleConfig &cfg) {
    check_config(cfg);
    auto t0 = std::chrono::steady_clock::now();
    TreeGraph tree = build_tree(cfg.tree);
    int workers = (int)std::min<std::int64_t>(cfg.workers, cfg.samples);
    std::vector<McCounters> parts(workers);
    std::vector<std::exception_ptr> failures(workers);
    auto job = [&](int k) {
        std::int64_t begin = cfg.samples * k / workers;
        std::int64_t end = cfg.samples * (k + 1) / workers;
        try {
            parts[k] = run_range(tree, cfg, begin, end);
        } catch (...) {
            failures[k] = std::current_exception();
        }
    };
    if (workers == 1) {
        job(0);
    } else {
        std::vector<std::thread> pool;
        for (int k = 0; k < workers; k++) {
            pool.emplace_back(job, k);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    McCounters total;
    for (int k = 0; k < workers; k++) {
        if (failures[k]) {
            std::rethrow_exception(failures[k]);
        }
        total += parts[k];
    }
    McEstimate e = estimate_from(total);
    e.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return e;
}

}  // namespace

const char *fault_model_name(FaultModel m) {
    return m == FaultModel::Pauli ? "pauli" : "marginal";
}

FaultModel parse_fault_model(const std::string &s) {
    if (s == "pauli") {
        return FaultModel::Pauli;
    }
    if (s == "marginal") {
        return FaultModel::Marginal;
    }
    throw UsageError("unknown fault model '" + s + "' (expected pauli or marginal)");
}

McCounters &McCounters::operator+=(const McCounters &o) {
    samples += o.samples;
    successes += o.successes;
    errors += o.errors;
    zz_errors += o.zz_errors;
    xx_errors += o.xx_errors;
    bsm_photons += o.bsm_photons;
    x_photons += o.x_photons;
    z_photons += o.z_photons;
    return *this;
}

McEstimate estimate_from(const McCounters &c) {
    McEstimate e;
    e.counts = c;
    if (c.samples > 0) {
        e.pr_complete = (double)c.successes / c.samples;
        e.pr_stderr = std::sqrt(e.pr_complete * (1 - e.pr_complete) / c.samples);
    }
    if (c.successes > 0) {
        e.err_complete = (double)c.errors / c.successes;
        e.err_stderr = std::sqrt(e.err_complete * (1 - e.err_complete) / c.successes);
    }
    return e;
}

void sample_world(const TreeGraph &tree, const SampleConfig &cfg, std::uint64_t index, World &world) {
    if (world.n != tree.size()) {
        world.resize(tree.size());
    }
    Scratch s;
    fill_world(cfg, index, world, s);
}

McEstimate run_static(const SampleConfig &cfg) {
    SampleConfig c = cfg;
    c.protocol = Protocol::Static;
    return run_protocol(c);
}

McEstimate run_dynamic(const SampleConfig &cfg) {
    SampleConfig c = cfg;
    c.protocol = Protocol::Dynamic;
    return run_protocol(c);
}

McEstimate run_loss_only(const SampleConfig &cfg) {
    SampleConfig c = cfg;
    c.protocol = Protocol::LossOnly;
    return run_protocol(c);
}

McEstimate run_monte_carlo(const SampleConfig &cfg) {
    return run_protocol(cfg);
}

double enumerate_success(Protocol protocol, const BranchingVector &b, const ChannelParams &params, int max_pairs) {
    TreeGraph tree = build_tree(b);
    int pairs = tree.size() - 1;
    if (pairs > max_pairs) {
        throw SizeError("enumeration walks 5^" + std::to_string(pairs) + " patterns; limit is " +
                        std::to_string(max_pairs) + " pairs");
    }
    double eta = params.eta;
    // (lost A, lost B, coin) and its probability
    struct State {
        std::uint8_t la, lb, coin;
        double p;
    };
    const State states[5] = {
        {0, 0, 1, 0.5 * eta * eta}, {0, 0, 0, 0.5 * eta * eta}, {1, 0, 0, (1 - eta) * eta},
        {0, 1, 0, eta * (1 - eta)}, {1, 1, 0, (1 - eta) * (1 - eta)},
    };
    World w;
    w.resize(tree.size());
    ProtocolEvaluator ev(tree);
    CounterRng unused(0, 0);
    std::vector<int> digit(pairs + 1, 0);
    double total = 0;
    while (true) {
        double p = 1;
        for (int v = 1; v <= pairs; v++) {
            const State &s = states[digit[v]];
            w.lost[0][v] = s.la;
            w.lost[1][v] = s.lb;
            w.coin[v] = s.coin;
            p *= s.p;
        }
        if (p > 0 && ev.run(protocol, w, unused).success) {
            total += p;
        }
        int v = 1;
        while (v <= pairs && ++digit[v] == 5) {
            digit[v++] = 0;
        }
        if (v > pairs) {
            break;
        }
    }
    return total;
}

TwoPhotonCounts sample_two_photon_faults(const ChannelParams &params, std::int64_t samples, std::uint64_t seed) {
    TwoPhotonCounts c;
    CounterRng rng(seed, 0);
    double pd = params.eps_d();
    for (std::int64_t i = 0; i < samples; i++) {
        Pauli f[2];
        for (auto &x : f) {
            x = rng.next_double() < pd ? (Pauli)(1 + rng.below(3)) : Pauli::I;
        }
        BsmFlips b = bsm_flips(f[0], f[1]);
        c.samples++;
        c.zz_flips += b.zz;
        c.xx_parity_flips += b.xx;
        c.xx_wrong += b.xx_wrong;
    }
    return c;
}

int default_workers() {
    if (const char *env = std::getenv("TREEBSM_WORKERS")) {
        try {
            int k = std::stoi(env);
            if (k >= 1) {
                return k;
            }
        } catch (...) {
        }
        throw UsageError(std::string("TREEBSM_WORKERS must be a positive integer, got '") + env + "'");
    }
    unsigned h = std::thread::hardware_concurrency();
    return h == 0 ? 1 : (int)h;
}

}  // namespace treebsm
