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

#ifndef TREEBSM_SIMD_BITS_H
#define TREEBSM_SIMD_BITS_H

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace treebsm::simd {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);

/// Word-array kernels used by the tableau (symplectic rows) and the samplers
/// (Bernoulli thresholds). One table per instruction set.
struct Kernels {
    Isa isa;
    /// dst[i] ^= src[i]
    void (*xor_into)(std::uint64_t *dst, const std::uint64_t *src, std::size_t n);
    /// popcount of (a[i] & b[i]) summed over i
    std::uint64_t (*popcount_and)(const std::uint64_t *a, const std::uint64_t *b, std::size_t n);
    /// popcount of a[i] summed over i
    std::uint64_t (*popcount)(const std::uint64_t *a, std::size_t n);
    /// bit i of out is set iff r[i] < threshold. out holds ceil(n/64) words,
    /// tail bits are cleared.
    void (*threshold_mask)(const std::uint64_t *r, std::size_t n, std::uint64_t threshold, std::uint64_t *out);
};

const Kernels &scalar_kernels();
/// Null when the binary was built without AVX2 support.
const Kernels *avx2_kernels();

bool cpu_has_avx2();

/// Best table for this machine. TREEBSM_SIMD=scalar in the environment pins
/// the scalar path.
const Kernels &kernels();

/// Maps p in [0,1] onto a u64 threshold so that Pr[u < t] = p for uniform u
/// (up to 2^-64). p = 1 maps to the max value and is special-cased by callers.
std::uint64_t probability_threshold(double p);

}  // namespace treebsm::simd

#endif
