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

#ifndef TREEBSM_MONTECARLO_RNG_H
#define TREEBSM_MONTECARLO_RNG_H

#include <array>
#include <cstdint>

namespace treebsm {

/// Philox4x32-10 block function. counter and key are consumed as given.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter, std::array<std::uint32_t, 2> key);

/// Counter-based stream. A stream is named by (seed, stream id); the i-th
/// 64-bit output is a pure function of (seed, stream id, i), so streams can be
/// split, skipped and replayed without shared state.
class CounterRng {
   public:
    CounterRng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {
    }

    /// Substream for a labelled purpose (loss flags, faults, votes, ...).
    CounterRng split(std::uint32_t label) const;

    std::uint64_t next_u64();
    /// Uniform in [0, 1) with 53 random bits.
    double next_double() {
        return (double)(next_u64() >> 11) * 0x1.0p-53;
    }
    bool bernoulli(double p) {
        return next_double() < p;
    }
    /// Uniform in [0, n).
    std::uint32_t below(std::uint32_t n);

    /// Fills out[0..n) with consecutive outputs.
    void fill(std::uint64_t *out, std::size_t n);

    std::uint64_t position() const {
        return counter_;
    }

   private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
    std::uint64_t buffered_ = 0;
    bool has_buffered_ = false;
};

}  // namespace treebsm

#endif
