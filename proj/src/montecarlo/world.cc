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

#include "treebsm/montecarlo/world.h"

#include <algorithm>

namespace treebsm {

BsmFlips bsm_flips(Pauli a, Pauli b) {
    BsmFlips f;
    f.zz = flips_z(a) != flips_z(b);
    f.xx = flips_x(a) != flips_x(b);
    f.xx_wrong = f.zz || f.xx;
    return f;
}

void World::resize(int num_vertices) {
    n = num_vertices;
    for (int s = 0; s < 2; s++) {
        lost[s].assign(n, 0);
        z_err[s].assign(n, 0);
        x_err[s].assign(n, 0);
    }
    coin.assign(n, 0);
    zz_err.assign(n, 0);
    xx_err.assign(n, 0);
}

void World::clear_errors() {
    for (int s = 0; s < 2; s++) {
        std::fill(z_err[s].begin(), z_err[s].end(), 0);
        std::fill(x_err[s].begin(), x_err[s].end(), 0);
    }
    std::fill(zz_err.begin(), zz_err.end(), 0);
    std::fill(xx_err.begin(), xx_err.end(), 0);
}

}  // namespace treebsm
