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

#ifndef TREEBSM_MONTECARLO_WORLD_H
#define TREEBSM_MONTECARLO_WORLD_H

#include <cstdint>
#include <vector>

#include "treebsm/core/channel.h"

namespace treebsm {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// Z readout of a photon carrying this fault is wrong.
inline bool flips_z(Pauli p) {
    return p == Pauli::X || p == Pauli::Y;
}
/// X readout of a photon carrying this fault is wrong.
inline bool flips_x(Pauli p) {
    return p == Pauli::Y || p == Pauli::Z;
}

/// Readout errors of one two-photon BSM from the two photons' faults.
struct BsmFlips {
    bool zz;        // ZZ' parity flipped: odd number of {X,Y}
    bool xx;        // XX' parity flipped: odd number of {Y,Z}
    bool xx_wrong;  // reported Bell state wrong: zz or xx
};
BsmFlips bsm_flips(Pauli a, Pauli b);

/// Everything random about one sample, indexed by tree vertex (index 0, the
/// root, is unused). Side 0 is tree A, side 1 is tree B; pair v is (A_v, B_v).
struct World {
    int n = 0;
    std::vector<std::uint8_t> lost[2];
    std::vector<std::uint8_t> coin;      // complete when both photons arrive
    std::vector<std::uint8_t> z_err[2];  // single-photon Z readout wrong
    std::vector<std::uint8_t> x_err[2];  // single-photon X readout wrong
    std::vector<std::uint8_t> zz_err;    // BSM ZZ' readout wrong
    std::vector<std::uint8_t> xx_err;    // BSM XX' readout wrong

    void resize(int num_vertices);
    void clear_errors();

    BsmOutcome outcome(int v) const {
        if (lost[0][v] || lost[1][v]) {
            return BsmOutcome::Failed;
        }
        return coin[v] ? BsmOutcome::Complete : BsmOutcome::Partial;
    }
};

}  // namespace treebsm

#endif
