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

#ifndef TREEBSM_CORE_CHANNEL_H
#define TREEBSM_CORE_CHANNEL_H

#include <cstdint>
#include <string_view>

namespace treebsm {

/// Single-photon detection efficiency eta and single-qubit measurement error eps.
struct ChannelParams {
    double eta = 1.0;
    double eps = 0.0;

    /// Throws UsageError unless both lie in [0, 1].
    static ChannelParams make(double eta, double eps);

    /// Depolarization rate per photon.
    double eps_d() const {
        return 1.5 * eps;
    }
    /// XX' readout error of a two-photon BSM.
    double eps_bsm() const {
        return 3.0 * eps * (1.0 - eps);
    }
    double err_dzz() const {
        return (2.0 / 3.0) * eps_bsm();
    }
    double err_dxx() const {
        return eps_bsm();
    }
};

enum class BsmOutcome : std::uint8_t { Complete, Partial, Failed };

std::string_view outcome_name(BsmOutcome o);

/// Pr of a single BSM outcome: eta^2/2, eta^2/2, 1 - eta^2.
double outcome_probability(BsmOutcome o, const ChannelParams &params);

/// Sibling-group outcome tally.
struct OutcomeCounts {
    int complete = 0;
    int partial = 0;
    int failed = 0;
    int total() const {
        return complete + partial + failed;
    }
};

/// Multinomial probability of an outcome tally (order of siblings ignored).
double outcome_probability(const OutcomeCounts &counts, const ChannelParams &params);

/// s! / (a! b! c!) as a double. Exact up to well past the sizes used here.
double multinomial(int a, int b, int c);
double binomial(int n, int k);

/// Enumerates every tally with the given total.
template <typename F>
void for_each_outcome_counts(int total, F &&f) {
    for (int c = 0; c <= total; c++) {
        for (int p = 0; p + c <= total; p++) {
            f(OutcomeCounts{c, p, total - c - p});
        }
    }
}

}  // namespace treebsm

#endif
