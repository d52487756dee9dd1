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

#ifndef TREEBSM_MONTECARLO_EVALUATE_H
#define TREEBSM_MONTECARLO_EVALUATE_H

#include <cstdint>
#include <vector>

#include "treebsm/core/protocol.h"
#include "treebsm/core/tree.h"
#include "treebsm/montecarlo/rng.h"
#include "treebsm/montecarlo/world.h"

namespace treebsm {

struct LogicalOutcome {
    bool success = false;
    bool error = false;     // ZZ_L or XX_L wrong, meaningful on success
    bool zz_error = false;
    bool xx_error = false;
};

/// Runs a protocol's decision procedure on one world.
///
/// Indirect results are preferred over direct ones, and sibling results are
/// combined by majority vote (an even vote drops one result chosen with
/// `vote_rng`). Every photon's measurement basis is recorded, and a photon
/// asked for in two different bases raises std::logic_error.
class ProtocolEvaluator {
   public:
    explicit ProtocolEvaluator(const TreeGraph &tree);

    LogicalOutcome run(Protocol protocol, const World &world, CounterRng &vote_rng);

    /// Photons measured in each basis during the last run, side 0 and 1.
    struct BasisCounts {
        int bsm = 0, x = 0, z = 0;
    };
    BasisCounts basis_counts() const;

   private:
    struct Result {
        bool ok;
        bool err;
    };
    enum Mode : std::uint8_t { None = 0, Bsm = 1, MeasX = 2, MeasZ = 3 };

    void mark(int v, int side, Mode m);
    void mark_pair(int v) {
        mark(v, 0, Bsm);
        mark(v, 1, Bsm);
    }
    Result vote(int m, int wrong);

    Result zz_static(int v);
    Result zz_dynamic(int v);
    Result iz(int v, int side);
    Result mz(int v, int side);

    LogicalOutcome top_static();
    LogicalOutcome top_dynamic();
    LogicalOutcome top_loss_only();

    const TreeGraph &t_;
    const World *w_ = nullptr;
    CounterRng *rng_ = nullptr;
    std::vector<std::uint8_t> mode_[2];
};

}  // namespace treebsm

#endif
