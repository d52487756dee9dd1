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

// Compiled without -mavx2. Each kernel carries a target attribute and is only
// reached after a runtime CPU check.

#include "treebsm/simd/bits.h"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define TREEBSM_HAVE_AVX2_KERNELS 1
#include <immintrin.h>
#endif

namespace treebsm::simd {

#ifdef TREEBSM_HAVE_AVX2_KERNELS
namespace {

#define TREEBSM_AVX2 __attribute__((target("avx2,popcnt")))

TREEBSM_AVX2 void xor_into_avx2(std::uint64_t *dst, const std::uint64_t *src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i a = _mm256_loadu_si256((const __m256i *)(dst + i));
        __m256i b = _mm256_loadu_si256((const __m256i *)(src + i));
        _mm256_storeu_si256((__m256i *)(dst + i), _mm256_xor_si256(a, b));
    }
    for (; i < n; i++) {
        dst[i] ^= src[i];
    }
}

// Nibble lookup popcount, summed into 64-bit lanes with sad_epu8.
TREEBSM_AVX2 inline __m256i popcount_lanes(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(
        0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
    __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

TREEBSM_AVX2 std::uint64_t hsum(__m256i acc) {
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256((__m256i *)lanes, acc);
    return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

TREEBSM_AVX2 std::uint64_t popcount_and_avx2(const std::uint64_t *a, const std::uint64_t *b, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i x = _mm256_loadu_si256((const __m256i *)(a + i));
        __m256i y = _mm256_loadu_si256((const __m256i *)(b + i));
        acc = _mm256_add_epi64(acc, popcount_lanes(_mm256_and_si256(x, y)));
    }
    std::uint64_t total = hsum(acc);
    for (; i < n; i++) {
        total += (std::uint64_t)_mm_popcnt_u64(a[i] & b[i]);
    }
    return total;
}

TREEBSM_AVX2 std::uint64_t popcount_avx2(const std::uint64_t *a, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_add_epi64(acc, popcount_lanes(_mm256_loadu_si256((const __m256i *)(a + i))));
    }
    std::uint64_t total = hsum(acc);
    for (; i < n; i++) {
        total += (std::uint64_t)_mm_popcnt_u64(a[i]);
    }
    return total;
}

TREEBSM_AVX2 void threshold_mask_avx2(
    const std::uint64_t *r, std::size_t n, std::uint64_t threshold, std::uint64_t *out) {
    // unsigned compare via signed compare after flipping the top bit
    const __m256i flip = _mm256_set1_epi64x((long long)0x8000000000000000ULL);
    const __m256i t = _mm256_xor_si256(_mm256_set1_epi64x((long long)threshold), flip);
    std::size_t words = (n + 63) / 64;
    for (std::size_t w = 0; w < words; w++) {
        std::size_t base = w * 64;
        std::size_t end = n - base < 64 ? n - base : 64;
        std::uint64_t bits = 0;
        std::size_t j = 0;
        for (; j + 4 <= end; j += 4) {
            __m256i v = _mm256_xor_si256(_mm256_loadu_si256((const __m256i *)(r + base + j)), flip);
            __m256i lt = _mm256_cmpgt_epi64(t, v);
            bits |= (std::uint64_t)_mm256_movemask_pd(_mm256_castsi256_pd(lt)) << j;
        }
        for (; j < end; j++) {
            bits |= (std::uint64_t)(r[base + j] < threshold) << j;
        }
        out[w] = bits;
    }
}

}  // namespace

const Kernels *avx2_kernels() {
    static const Kernels k{Isa::Avx2, xor_into_avx2, popcount_and_avx2, popcount_avx2, threshold_mask_avx2};
    return &k;
}

bool cpu_has_avx2() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
}

#else

const Kernels *avx2_kernels() {
    return nullptr;
}

bool cpu_has_avx2() {
    return false;
}

#endif

}  // namespace treebsm::simd
