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

#include "treebsm/analytic/dynamic_protocol.h"

#include <cmath>

#include "treebsm/core/errors.h"

namespace treebsm {

static double ipow(double x, int k) {
    return k == 0 ? 1.0 : std::pow(x, k);
}

DynamicLayerStats dynamic_layer_recursion(const BranchingVector &b, const ChannelParams &params) {
    int d = b.depth();
    double e2 = params.eta * params.eta;
    double h = 0.5 * e2;
    double ebsm = params.eps_bsm();
    double edzz = params.err_dzz();

    DynamicLayerStats out;
    out.single_qubit = static_layer_recursion(b, params, Basis::Z);
    out.levels.assign(d + 1, DynamicLevel{});
    auto &L = out.levels;
    for (int k = d; k >= 0; k--) {
        DynamicLevel &s = L[k];
        const LevelStats &z = out.single_qubit[k];
        s.pr_i_f = z.pr_i * z.pr_i;
        s.err_i_f = 2.0 * z.err_i * (1.0 - z.err_i);
        if (k < d) {
            if (k + 1 == d) {
                s.pr_s_c = h;
                s.err_s_c = ebsm;
            } else {
                // child complete, and every grandchild pair's ZZ' recovered,
                // each according to its own outcome
                int g = b[k + 1];
                const DynamicLevel &gc = L[k + 2];
                double total = 0, wrong = 0;
                for_each_outcome_counts(g, [&](OutcomeCounts c) {
                    double w = outcome_probability(c, params) * ipow(gc.pr_i_f, c.failed);
                    double keep = (1.0 - 2.0 * ebsm) * ipow(1.0 - 2.0 * gc.err_m_c, c.complete) *
                                  ipow(1.0 - 2.0 * gc.err_m_p, c.partial) * ipow(1.0 - 2.0 * gc.err_m_f, c.failed);
                    total += w;
                    wrong += w * 0.5 * (1.0 - keep);
                });
                s.pr_s_c = h * total;
                s.err_s_c = safe_ratio(wrong, total);
            }
            s.pr_i_c = 1.0 - ipow(1.0 - s.pr_s_c, b[k]);
            double acc = 0;
            for (int m = 1; m <= b[k]; m++) {
                acc += binomial_pmf(b[k], m, s.pr_s_c) * vote_error(m, s.err_s_c);
            }
            s.err_i_c = safe_ratio(acc, s.pr_i_c);
        }
        s.pr_m = e2 + (1.0 - e2) * s.pr_i_f;
        // indirect preferred over the direct ZZ' readout
        s.err_m_c = s.pr_i_c * s.err_i_c + (1.0 - s.pr_i_c) * edzz;
        s.err_m_p = s.pr_i_f * s.err_i_f + (1.0 - s.pr_i_f) * edzz;
        s.err_m_f = s.err_i_f;
        s.err_m = safe_ratio(h * s.err_m_c + h * s.err_m_p + (1.0 - e2) * s.pr_i_f * s.err_m_f, s.pr_m);
    }
    return out;
}

LogicalBsmResult dynamic_logical_bsm(const BranchingVector &b, const ChannelParams &params) {
    DynamicLayerStats st = dynamic_layer_recursion(b, params);
    int d = b.depth();
    LogicalBsmResult res;
    res.protocol = Protocol::Dynamic;
    res.pr_xx = st[0].pr_i_c;
    res.pr_zz = ipow(st[1].pr_m, b[0]);
    double q = d >= 2 ? ipow(st[2].pr_m, b[1]) : 1.0;
    res.pr_complete = first_level_success(b[0], params, st[1].pr_i_f, q);
    res.err_xx = st[0].err_i_c;
    res.err_zz = odd_parity_probability(b[0], st[1].err_m);
    res.err_complete = res.err_zz + (1.0 - res.err_zz) * res.err_xx;
    return res;
}

LogicalBsmResult logical_bsm(Protocol protocol, const BranchingVector &b, const ChannelParams &params) {
    switch (protocol) {
        case Protocol::Static:
            return static_logical_bsm(b, params);
        case Protocol::Dynamic:
            return dynamic_logical_bsm(b, params);
        default:
            throw UnsupportedConfiguration("the loss-only protocol has no analytic model; use the sampler");
    }
}

}  // namespace treebsm
