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

#include "treebsm/analytic/static_protocol.h"

#include <cmath>

namespace treebsm {

static double ipow(double x, int k) {
    return k == 0 ? 1.0 : std::pow(x, k);
}

double binomial_pmf(int n, int m, double p) {
    return binomial(n, m) * ipow(p, m) * ipow(1.0 - p, n - m);
}

double vote_error(int m, double e) {
    if (m <= 0) {
        return 0.0;
    }
    if (m % 2 == 0) {
        m--;
    }
    double total = 0;
    for (int i = (m + 1) / 2; i <= m; i++) {
        total += binomial_pmf(m, i, e);
    }
    return total;
}

double odd_parity_probability(int count, double p) {
    double total = 0;
    for (int j = 1; j <= count; j += 2) {
        total += binomial_pmf(count, j, p);
    }
    return total;
}

DirectRates direct_rates(Basis basis, const ChannelParams &params) {
    if (basis == Basis::Z) {
        return {params.eta, params.eta, params.eps, params.eps};
    }
    double e2 = params.eta * params.eta;
    return {e2, 0.5 * e2, params.err_dzz(), params.err_dxx()};
}

LayerStats static_error_recursion(
    const BranchingVector &b, const ChannelParams &params, Basis basis, const LayerStats &success) {
    int d = b.depth();
    DirectRates r = direct_rates(basis, params);
    LayerStats out = success;
    auto &L = out.levels;
    L[d].err_d = r.err_w;
    L[d].err_i = 0;
    L[d].err_s = 0;
    L[d].err_m = r.err_w;
    for (int k = d - 1; k >= 0; k--) {
        LevelStats &s = L[k];
        s.err_d = r.err_w;
        if (k + 1 == d) {
            s.err_s = r.err_partner;
        } else {
            // one partner readout plus the M results of b_{k+1} grandchildren;
            // the product is wrong when an odd number of them are
            int g = b[k + 1];
            double odd = odd_parity_probability(g, L[k + 2].err_m);
            s.err_s = r.err_partner * (1.0 - odd) + (1.0 - r.err_partner) * odd;
        }
        double acc = 0;
        for (int m = 1; m <= b[k]; m++) {
            acc += binomial_pmf(b[k], m, s.pr_s) * vote_error(m, s.err_s);
        }
        s.err_i = safe_ratio(acc, s.pr_i);
        double ratio = safe_ratio(s.pr_i, s.pr_m);
        s.err_m = ratio * s.err_i + (1.0 - ratio) * s.err_d;
    }
    return out;
}

LayerStats static_layer_recursion(const BranchingVector &b, const ChannelParams &params, Basis basis) {
    int d = b.depth();
    DirectRates r = direct_rates(basis, params);
    LayerStats out;
    out.basis = basis;
    out.levels.assign(d + 1, LevelStats{});
    auto &L = out.levels;
    L[d].pr_d = r.pr_w;
    L[d].pr_m = r.pr_w;
    for (int k = d - 1; k >= 0; k--) {
        LevelStats &s = L[k];
        s.pr_d = r.pr_w;
        s.pr_s = k + 1 == d ? r.pr_partner : r.pr_partner * ipow(L[k + 2].pr_m, b[k + 1]);
        s.pr_i = 1.0 - ipow(1.0 - s.pr_s, b[k]);
        s.pr_m = s.pr_d + (1.0 - s.pr_d) * s.pr_i;
    }
    return static_error_recursion(b, params, basis, out);
}

double first_level_success(int b0, const ChannelParams &params, double recover, double q) {
    double total = 0;
    for_each_outcome_counts(b0, [&](OutcomeCounts c) {
        if (c.complete >= 1) {
            total += outcome_probability(c, params) * ipow(recover, c.failed) * (1.0 - ipow(1.0 - q, c.complete));
        }
    });
    return total;
}

LogicalBsmResult static_logical_bsm(const BranchingVector &b, const ChannelParams &params) {
    LayerStats zz = static_layer_recursion(b, params, Basis::ZZ);
    int d = b.depth();
    LogicalBsmResult res;
    res.protocol = Protocol::Static;
    res.pr_xx = zz[0].pr_i;
    res.pr_zz = ipow(zz[1].pr_m, b[0]);
    double q = d >= 2 ? ipow(zz[2].pr_m, b[1]) : 1.0;
    res.pr_complete = first_level_success(b[0], params, zz[1].pr_i, q);
    res.err_xx = zz[0].err_i;
    res.err_zz = odd_parity_probability(b[0], zz[1].err_m);
    res.err_complete = res.err_zz + (1.0 - res.err_zz) * res.err_xx;
    return res;
}

}  // namespace treebsm
