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

#include <algorithm>
#include <bit>

#include "treebsm/simd/bits.h"

namespace treebsm::simd {
namespace {

void xor_into_scalar(std::uint64_t *dst, const std::uint64_t *src, std::size_t n) {
    for (std::size_t i = 0; i < n; i++) {
        dst[i] ^= src[i];
    }
}

std::uint64_t popcount_and_scalar(const std::uint64_t *a, const std::uint64_t *b, std::size_t n) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < n; i++) {
        total += std::popcount(a[i] & b[i]);
    }
    return total;
}

std::uint64_t popcount_scalar(const std::uint64_t *a, std::size_t n) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < n; i++) {
        total += std::popcount(a[i]);
    }
    return total;
}

void threshold_mask_scalar(const std::uint64_t *r, std::size_t n, std::uint64_t threshold, std::uint64_t *out) {
    std::size_t words = (n + 63) / 64;
    for (std::size_t w = 0; w < words; w++) {
        std::uint64_t bits = 0;
        std::size_t end = std::min<std::size_t>(64, n - w * 64);
        for (std::size_t j = 0; j < end; j++) {
            bits |= (std::uint64_t)(r[w * 64 + j] < threshold) << j;
        }
        out[w] = bits;
    }
}

}  // namespace

const Kernels &scalar_kernels() {
    static const Kernels k{
        Isa::Scalar, xor_into_scalar, popcount_and_scalar, popcount_scalar, threshold_mask_scalar};
    return k;
}

}  // namespace treebsm::simd
