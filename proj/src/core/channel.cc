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

#include "treebsm/core/channel.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "treebsm/core/errors.h"

namespace treebsm {

ChannelParams ChannelParams::make(double eta, double eps) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw UsageError("eta must lie in [0,1], got " + std::to_string(eta));
    }
    if (!(eps >= 0.0 && eps <= 1.0)) {
        throw UsageError("eps must lie in [0,1], got " + std::to_string(eps));
    }
    return ChannelParams{eta, eps};
}

std::string_view outcome_name(BsmOutcome o) {
    switch (o) {
        case BsmOutcome::Complete:
            return "complete";
        case BsmOutcome::Partial:
            return "partial";
        default:
            return "failed";
    }
}

double outcome_probability(BsmOutcome o, const ChannelParams &params) {
    double e2 = params.eta * params.eta;
    return o == BsmOutcome::Failed ? 1.0 - e2 : 0.5 * e2;
}

double binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0.0;
    }
    k = std::min(k, n - k);
    // every partial product is itself a binomial coefficient, so this is
    // exact while the value fits in 53 bits
    double r = 1.0;
    for (int i = 1; i <= k; i++) {
        r = r * (n - k + i) / i;
    }
    return r;
}

double multinomial(int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0) {
        return 0.0;
    }
    return binomial(a + b, b) * binomial(a + b + c, c);
}

static double ipow(double x, int k) {
    // 0^0 = 1 is what every caller wants
    return k == 0 ? 1.0 : std::pow(x, k);
}

double outcome_probability(const OutcomeCounts &counts, const ChannelParams &params) {
    double e2 = params.eta * params.eta;
    return multinomial(counts.complete, counts.partial, counts.failed) *
           ipow(0.5 * e2, counts.complete + counts.partial) * ipow(1.0 - e2, counts.failed);
}

}  // namespace treebsm
