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

#include "treebsm/montecarlo/rng.h"

namespace treebsm {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53;
constexpr std::uint32_t kMul1 = 0xCD9E8D57;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t &hi, std::uint32_t &lo) {
    std::uint64_t p = (std::uint64_t)a * b;
    hi = (std::uint32_t)(p >> 32);
    lo = (std::uint32_t)p;
}

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> c, std::array<std::uint32_t, 2> k) {
    for (int round = 0; round < 10; round++) {
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kMul0, c[0], hi0, lo0);
        mulhilo(kMul1, c[2], hi1, lo1);
        c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
        k[0] += kWeyl0;
        k[1] += kWeyl1;
    }
    return c;
}

CounterRng CounterRng::split(std::uint32_t label) const {
    return CounterRng(seed_, mix64(stream_ ^ mix64(0x5851F42D4C957F2DULL + label)));
}

std::uint64_t CounterRng::next_u64() {
    if (has_buffered_) {
        has_buffered_ = false;
        return buffered_;
    }
    std::array<std::uint32_t, 4> ctr{
        (std::uint32_t)counter_, (std::uint32_t)(counter_ >> 32), (std::uint32_t)stream_,
        (std::uint32_t)(stream_ >> 32)};
    std::array<std::uint32_t, 2> key{(std::uint32_t)seed_, (std::uint32_t)(seed_ >> 32)};
    counter_++;
    auto r = philox4x32_10(ctr, key);
    buffered_ = ((std::uint64_t)r[3] << 32) | r[2];
    has_buffered_ = true;
    return ((std::uint64_t)r[1] << 32) | r[0];
}

std::uint32_t CounterRng::below(std::uint32_t n) {
    // Lemire's multiply-shift with rejection, exact
    std::uint64_t m = (next_u64() >> 32) * n;
    std::uint32_t low = (std::uint32_t)m;
    if (low < n) {
        std::uint32_t t = (std::uint32_t)(-n) % n;
        while (low < t) {
            m = (next_u64() >> 32) * n;
            low = (std::uint32_t)m;
        }
    }
    return (std::uint32_t)(m >> 32);
}

void CounterRng::fill(std::uint64_t *out, std::size_t n) {
    for (std::size_t i = 0; i < n; i++) {
        out[i] = next_u64();
    }
}

}  // namespace treebsm
