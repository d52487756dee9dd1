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

#ifndef TREEBSM_MONTECARLO_SAMPLER_H
#define TREEBSM_MONTECARLO_SAMPLER_H

#include <cstdint>
#include <functional>

#include "treebsm/core/branching.h"
#include "treebsm/core/channel.h"
#include "treebsm/core/protocol.h"
#include "treebsm/core/tree.h"
#include "treebsm/montecarlo/world.h"

namespace treebsm {

/// How readout errors are drawn.
///   Pauli: each photon gets X, Y or Z with total probability eps_d and every
///     readout error follows from those faults (two BSM readouts of one pair
///     are correlated).
///   Marginal: every readout flips independently with the rate the analytic
///     model assigns to it.
enum class FaultModel { Pauli, Marginal };

const char *fault_model_name(FaultModel m);
FaultModel parse_fault_model(const std::string &s);

struct SampleConfig {
    BranchingVector tree;
    ChannelParams params;
    Protocol protocol = Protocol::Static;
    std::int64_t samples = 100000;
    std::uint64_t seed = 0;
    int workers = 1;
    FaultModel faults = FaultModel::Pauli;
};

struct McCounters {
    std::int64_t samples = 0;
    std::int64_t successes = 0;
    std::int64_t errors = 0;  // among successes
    std::int64_t zz_errors = 0;
    std::int64_t xx_errors = 0;
    // photons measured per basis, summed over samples
    std::int64_t bsm_photons = 0;
    std::int64_t x_photons = 0;
    std::int64_t z_photons = 0;

    McCounters &operator+=(const McCounters &o);
    bool operator==(const McCounters &) const = default;
};

struct McEstimate {
    McCounters counts;
    double pr_complete = 0;
    double pr_stderr = 0;
    double err_complete = 0;  // 0 when there were no successes
    double err_stderr = 0;
    double seconds = 0;
};

McEstimate estimate_from(const McCounters &c);

/// Fills `world` for sample number `index`. The draw depends only on
/// (seed, index), never on how samples are split across workers.
void sample_world(const TreeGraph &tree, const SampleConfig &cfg, std::uint64_t index, World &world);

McEstimate run_static(const SampleConfig &cfg);
McEstimate run_dynamic(const SampleConfig &cfg);
/// Requires eps = 0; throws UnsupportedConfiguration otherwise.
McEstimate run_loss_only(const SampleConfig &cfg);
/// Dispatches on cfg.protocol.
McEstimate run_monte_carlo(const SampleConfig &cfg);

/// Exact logical-BSM success probability, by walking every joint loss and
/// coin pattern (5 states per pair). Sizes are capped: throws SizeError past
/// `max_pairs` pairs.
double enumerate_success(Protocol protocol, const BranchingVector &tree, const ChannelParams &params,
                         int max_pairs = 10);

/// Readout flips of one BSM under per-photon Pauli faults.
struct TwoPhotonCounts {
    std::int64_t samples = 0;
    std::int64_t zz_flips = 0;
    std::int64_t xx_parity_flips = 0;
    std::int64_t xx_wrong = 0;
};
TwoPhotonCounts sample_two_photon_faults(const ChannelParams &params, std::int64_t samples, std::uint64_t seed);

/// Worker count when none is given: TREEBSM_WORKERS if set, else the
/// hardware concurrency.
int default_workers();

}  // namespace treebsm

#endif
