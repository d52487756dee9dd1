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

#include <cmath>
#include <cstdlib>
#include <string>

#include "treebsm/simd/bits.h"

namespace treebsm::simd {

std::string_view isa_name(Isa isa) {
    return isa == Isa::Avx2 ? "avx2" : "scalar";
}

static const Kernels &pick() {
    const char *env = std::getenv("TREEBSM_SIMD");
    if (env != nullptr && std::string(env) == "scalar") {
        return scalar_kernels();
    }
    if (avx2_kernels() != nullptr && cpu_has_avx2()) {
        return *avx2_kernels();
    }
    return scalar_kernels();
}

const Kernels &kernels() {
    static const Kernels &k = pick();
    return k;
}

std::uint64_t probability_threshold(double p) {
    if (!(p > 0.0)) {
        return 0;
    }
    if (p >= 1.0) {
        return ~0ULL;
    }
    // 2^64 * p, exact for the 53 significant bits p carries
    return (std::uint64_t)std::ldexp(p, 64);
}

}  // namespace treebsm::simd
