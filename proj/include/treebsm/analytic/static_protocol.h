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

#ifndef TREEBSM_ANALYTIC_STATIC_PROTOCOL_H
#define TREEBSM_ANALYTIC_STATIC_PROTOCOL_H

#include <vector>

#include "treebsm/core/branching.h"
#include "treebsm/core/channel.h"
#include "treebsm/core/protocol.h"

namespace treebsm {

/// Measured operator W. ZZ is the two-tree parity ZZ' (its partner is XX');
/// Z is the single-qubit chain (partner X).
enum class Basis { Z, ZZ };

/// Probabilities for one level: direct (D), single indirect via one child (S),
/// indirect via any child (I), and combined (M). err_* are conditioned on the
/// matching success event.
struct LevelStats {
    double pr_d = 0, pr_s = 0, pr_i = 0, pr_m = 0;
    double err_d = 0, err_s = 0, err_i = 0, err_m = 0;
};

struct LayerStats {
    Basis basis = Basis::ZZ;
    std::vector<LevelStats> levels;  // k = 0..d

    const LevelStats &operator[](int k) const {
        return levels[k];
    }
    int depth() const {
        return (int)levels.size() - 1;
    }
};

/// Direct success / error for W and its partner W~ at these parameters.
struct DirectRates {
    double pr_w, pr_partner, err_w, err_partner;
};
DirectRates direct_rates(Basis basis, const ChannelParams &params);

/// Success and error fields for levels d down to 0.
LayerStats static_layer_recursion(const BranchingVector &b, const ChannelParams &params, Basis basis);

/// Fills only the error fields, reading the success fields of `success`.
LayerStats static_error_recursion(
    const BranchingVector &b, const ChannelParams &params, Basis basis, const LayerStats &success);

/// Majority vote over m independent results each wrong with probability e.
/// Even m drops one result first; m = 0 gives 0.
double vote_error(int m, double e);

/// Probability that an odd number of `count` independent flips occur.
double odd_parity_probability(int count, double p);

/// Pr[exactly m of n successes], success probability p.
double binomial_pmf(int n, int m, double p);

struct LogicalBsmResult {
    Protocol protocol = Protocol::Static;
    double pr_xx = 0, pr_zz = 0, pr_complete = 0;
    double err_xx = 0, err_zz = 0, err_complete = 0;
};

LogicalBsmResult static_logical_bsm(const BranchingVector &b, const ChannelParams &params);

/// Sum over first-level outcome tallies with at least one complete BSM:
/// P(tally) * recover^{m_f} * (1 - (1 - q)^{m_c}).
double first_level_success(int b0, const ChannelParams &params, double recover, double q);

/// Conditional error helper: num / den, 0 when den is 0.
inline double safe_ratio(double num, double den) {
    return den > 0 ? num / den : 0.0;
}

}  // namespace treebsm

#endif
